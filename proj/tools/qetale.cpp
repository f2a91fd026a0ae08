// qetale command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 input or parse error,
// 3 computation error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qetale/qetale.hpp"

namespace qt = qetale;
using json = nlohmann::ordered_json;

namespace {

struct Config {
  std::string command;
  std::string input;
  std::string format = "text";
  int max_depth = qt::kDefaultMaxDepth;
  std::string at;
  std::string width = "1/1024";
  std::string main_var;
  std::string samples;
  std::uint64_t seed = 0;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw qt::Error(qt::ErrorKind::Parse, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- rendering helpers -------------------------------------------------

std::string rf(const qt::RatFun& r) { return qt::print_ratfun(r); }

std::string upoly_text(const qt::UPoly<qt::RatFun>& u) { return qt::print_upoly(u, "lambda", rf); }

json upoly_json(const qt::UPoly<qt::RatFun>& u) {
  json cs = json::array();
  for (const auto& c : u.coeffs()) cs.push_back({{"num", qt::print_poly(c.num())}, {"den", qt::print_poly(c.den())}});
  return {{"var", "lambda"}, {"text", upoly_text(u)}, {"coeffs", cs}};
}

json qpoly_json(const qt::QPoly& u, const std::string& var) {
  json cs = json::array();
  for (const auto& c : u.coeffs()) cs.push_back(c.str());
  return {{"var", var}, {"text", qt::print_qpoly(u, var)}, {"coeffs", cs}};
}

json polys_json(const std::vector<qt::MPoly>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(qt::print_poly(p));
  return a;
}

json point_json(const std::map<std::string, qt::Rat>& y) {
  json o = json::object();
  for (const auto& [k, v] : y) o[k] = v.str();
  return o;
}

std::string point_text(const std::map<std::string, qt::Rat>& y) {
  std::string s;
  for (const auto& [k, v] : y) s += (s.empty() ? "" : ",") + k + "=" + v.str();
  return s.empty() ? "()" : s;
}

std::string conj(const std::vector<qt::MPoly>& eqs) {
  if (eqs.empty()) return "(none)";
  std::string s;
  for (const auto& e : eqs) s += (s.empty() ? "" : ", ") + qt::print_poly(e) + " = 0";
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---- subres ------------------------------------------------------------

int cmd_subres(const Config& cfg) {
  auto sf = qt::parse_system_file(read_text(cfg.input));
  std::string var = cfg.main_var.empty() ? sf.vars.back() : cfg.main_var;
  auto vi = sf.full_ring.index_of(var);
  if (!vi) throw qt::Error(qt::ErrorKind::Domain, "main variable '" + var + "' is not declared");
  qt::UPoly<qt::MPoly> f = qt::to_upoly(sf.system[0], *vi);
  qt::UPoly<qt::MPoly> g = sf.system.size() > 1 ? qt::to_upoly(sf.system[1], *vi) : f.derivative();
  if (f.degree() < g.degree()) std::swap(f, g);
  auto ch = qt::sres_chain(f, g);
  auto back = [&](const qt::UPoly<qt::MPoly>& u) { return qt::from_upoly(u, *vi, sf.full_ring); };
  if (cfg.format == "json") {
    json chain = json::array();
    for (std::size_t j = 0; j < ch.polys.size(); ++j)
      chain.push_back({{"j", j}, {"sRes", qt::print_poly(ch.coeffs[j])}, {"sResP", qt::print_poly(back(ch.polys[j]))}});
    emit({{"main_var", var}, {"f", qt::print_poly(back(f))}, {"g", qt::print_poly(back(g))}, {"chain", chain}});
  } else {
    std::cout << "main variable: " << var << "\n";
    std::cout << "f = " << qt::print_poly(back(f)) << "\n";
    std::cout << "g = " << qt::print_poly(back(g)) << "\n";
    for (std::size_t j = 0; j < ch.polys.size(); ++j) {
      std::cout << "j=" << j << "  sRes = " << qt::print_poly(ch.coeffs[j]) << "\n";
      std::cout << "     sResP = " << qt::print_poly(back(ch.polys[j])) << "\n";
    }
  }
  return 0;
}

// ---- rur ---------------------------------------------------------------

int cmd_rur(const Config& cfg) {
  auto sf = qt::parse_system_file(read_text(cfg.input));
  if (!sf.params.empty())
    throw qt::Error(qt::ErrorKind::Domain, "rur expects a system without parameters (use stratify)");
  qt::Ring ring(sf.vars);
  std::vector<qt::MPoly> gens;
  for (const auto& f : sf.system) gens.push_back(qt::embed(f, ring));
  auto gb = qt::buchberger<qt::Rat>(gens, ring);
  auto qb = qt::quotient_basis(gb);
  if (qb.dim() == 0) throw qt::Error(qt::ErrorKind::EmptyStratum, "the system has no solutions");
  auto r = qt::rur_build(gb, gens);
  auto sep = qt::select_separating(gb);
  if (cfg.format == "json") {
    json nums = json::object();
    for (std::size_t i = 0; i < ring.size(); ++i) nums[ring.name(i)] = qpoly_json(r.numerators[i], "lambda");
    emit({{"vars", sf.vars},
          {"groebner", polys_json(gb.gens)},
          {"dim", qb.dim()},
          {"sigma", qt::print_poly(r.sigma)},
          {"charpoly", qpoly_json(sep.summary.charpoly, "lambda")},
          {"geo_count", sep.summary.geo_count},
          {"u", qpoly_json(r.u, "lambda")},
          {"g", qpoly_json(r.g, "lambda")},
          {"numerators", nums}});
  } else {
    std::cout << "groebner basis:\n";
    for (const auto& g : gb.gens) std::cout << "  " << qt::print_poly(g) << "\n";
    std::cout << "dim = " << qb.dim() << ", geometric count = " << sep.summary.geo_count << "\n";
    std::cout << "sigma = " << qt::print_poly(r.sigma) << "\n";
    std::cout << "chi = " << qt::print_qpoly(sep.summary.charpoly) << "\n";
    std::cout << "u = " << qt::print_qpoly(r.u) << "\n";
    std::cout << "g = " << qt::print_qpoly(r.g) << "\n";
    for (std::size_t i = 0; i < ring.size(); ++i)
      std::cout << ring.name(i) << " = (" << qt::print_qpoly(r.numerators[i]) << ") / g\n";
  }
  return 0;
}

// ---- stratify ----------------------------------------------------------

json rur_json(const qt::ParametricRUR& r, const std::vector<std::string>& vars) {
  json nums = json::object();
  for (std::size_t i = 0; i < r.numerators.size(); ++i) nums[vars[i]] = upoly_json(r.numerators[i]);
  return {{"u", upoly_json(r.u)}, {"g", upoly_json(r.g)}, {"numerators", nums}};
}

json chart_json(const qt::Chart& c, const std::vector<std::string>& vars) {
  json deltas = json::array();
  for (const auto& d : c.deltas) deltas.push_back(rf(d));
  return {{"equations", polys_json(c.equations)},
          {"nonvanish", qt::print_poly(c.nonvanish)},
          {"h", qt::print_poly(c.h)},
          {"sigma", qt::print_poly(c.sigma)},
          {"chi", upoly_json(c.chi)},
          {"deltas", deltas},
          {"s", c.s},
          {"u", upoly_json(c.u)},
          {"f", upoly_json(c.f)},
          {"rur", rur_json(c.rur, vars)},
          {"etale", c.etale}};
}

int cmd_stratify(const Config& cfg) {
  auto sf = qt::parse_system_file(read_text(cfg.input));
  auto ps = qt::make_param_system(sf);
  auto rep = qt::stratify(ps, cfg.max_depth);
  if (cfg.format == "json") {
    json strata = json::array();
    for (const auto& st : rep.strata) {
      const auto& c0 = st.charts.front();
      bool etale = std::all_of(st.charts.begin(), st.charts.end(), [](const qt::Chart& c) { return c.etale; });
      json charts = json::array();
      for (const auto& c : st.charts) charts.push_back(chart_json(c, sf.vars));
      json samples = json::array();
      for (const auto& y : qt::stratum_samples(st, sf.param_ring, 3, cfg.seed)) {
        auto probe = qt::real_count_probe(st, {y});
        samples.push_back({{"point", point_json(y)}, {"real_count", probe.counts[0]}});
      }
      strata.push_back({{"equations", polys_json(st.equations)},
                        {"nonvanish", qt::print_poly(st.nonvanish)},
                        {"rank", st.rank},
                        {"s", c0.s},
                        {"geo_count", st.geo_count},
                        {"depth", st.depth},
                        {"u", upoly_json(c0.u)},
                        {"f", upoly_json(c0.f)},
                        {"rur", rur_json(c0.rur, sf.vars)},
                        {"etale", etale},
                        {"charts", charts},
                        {"samples", samples}});
    }
    json excluded = json::array();
    for (const auto& x : rep.excluded)
      excluded.push_back({{"equations", polys_json(x.equations)},
                          {"nonvanish", qt::print_poly(x.nonvanish)},
                          {"reason", qt::to_string(x.reason)},
                          {"detail", x.detail},
                          {"depth", x.depth}});
    emit({{"params", sf.params}, {"vars", sf.vars}, {"strata", strata}, {"excluded", excluded}, {"depth", rep.depth}});
    return 0;
  }
  std::cout << rep.strata.size() << " strata, " << rep.excluded.size() << " excluded loci, depth " << rep.depth << "\n";
  for (std::size_t i = 0; i < rep.strata.size(); ++i) {
    const auto& st = rep.strata[i];
    std::cout << "\nstratum " << i + 1 << ": rank " << st.rank << ", geometric count " << st.geo_count << ", depth "
              << st.depth << "\n";
    std::cout << "  equations: " << conj(st.equations) << "\n";
    std::cout << "  nonvanish: " << qt::print_poly(st.nonvanish) << " != 0\n";
    for (std::size_t k = 0; k < st.charts.size(); ++k) {
      const auto& c = st.charts[k];
      std::cout << "  chart " << k + 1 << ": " << conj(c.equations) << ", " << qt::print_poly(c.nonvanish) << " != 0\n";
      std::cout << "    sigma = " << qt::print_poly(c.sigma) << ", s = " << c.s
                << ", etale = " << (c.etale ? "yes" : "no") << "\n";
      std::cout << "    chi = " << upoly_text(c.chi) << "\n";
      std::cout << "    u = " << upoly_text(c.u) << "\n";
      std::cout << "    f = " << upoly_text(c.f) << "\n";
      std::cout << "    g = " << upoly_text(c.rur.g) << "\n";
      for (std::size_t j = 0; j < c.rur.numerators.size(); ++j)
        std::cout << "    " << sf.vars[j] << " = (" << upoly_text(c.rur.numerators[j]) << ") / g\n";
    }
    for (const auto& y : qt::stratum_samples(st, sf.param_ring, 3, cfg.seed))
      std::cout << "  sample " << point_text(y) << ": real count " << qt::real_count_probe(st, {y}).counts[0] << "\n";
  }
  for (const auto& x : rep.excluded) {
    std::cout << "\nexcluded (" << qt::to_string(x.reason) << "): " << conj(x.equations) << ", "
              << qt::print_poly(x.nonvanish) << " != 0\n";
    std::cout << "  " << x.detail << "\n";
  }
  return 0;
}

// ---- fibers ------------------------------------------------------------

qt::Rat parse_width(const std::string& s) {
  qt::Rat w;
  try {
    w = qt::Rat::parse(s);
  } catch (const qt::Error&) {
    throw UsageError("--width: malformed rational '" + s + "'");
  }
  if (!(qt::Rat(0) < w)) throw UsageError("--width must be positive");
  qt::BigInt d = w.den();
  if ((d & (d - 1)) != 0) throw UsageError("--width must be a binary rational (denominator a power of 2)");
  return w;
}

int cmd_fibers(const Config& cfg) {
  if (cfg.at.empty()) throw UsageError("fibers requires --at");
  qt::Rat width = parse_width(cfg.width);
  auto sf = qt::parse_system_file(read_text(cfg.input));
  auto y = qt::parse_point(cfg.at);
  for (const auto& p : sf.params)
    if (!y.count(p)) throw qt::Error(qt::ErrorKind::PointNotInStratum, "no value given for parameter '" + p + "'");
  for (const auto& [k, v] : y)
    if (!sf.param_ring.index_of(k)) throw qt::Error(qt::ErrorKind::Domain, "'" + k + "' is not a parameter");
  for (std::size_t k = 0; k < sf.base.size(); ++k)
    if (!qt::evaluate(sf.base[k], y).is_zero())
      throw qt::Error(qt::ErrorKind::PointNotInStratum, "base equation " + qt::print_poly(sf.base[k]) + " does not vanish");
  auto ps = qt::make_param_system(sf);
  auto rep = qt::stratify(ps, cfg.max_depth);
  std::optional<std::size_t> idx;
  for (std::size_t i = 0; i < rep.strata.size() && !idx; ++i)
    if (rep.strata[i].contains(y)) idx = i;
  if (!idx) {
    for (const auto& x : rep.excluded)
      if (x.contains(y))
        throw qt::Error(x.reason, "the point lies in an excluded locus (" + x.detail + ")");
    throw qt::Error(qt::ErrorKind::PointNotInStratum, "the point lies in no stratum");
  }
  const auto& st = rep.strata[*idx];
  auto secs = qt::fiber_at(st, y, width);
  if (cfg.format == "json") {
    json sj = json::array();
    for (const auto& s : secs) {
      json coords = json::object();
      for (std::size_t j = 0; j < s.coords.size(); ++j)
        coords[sf.vars[j]] = {s.coords[j].lo.str(), s.coords[j].hi.str()};
      sj.push_back({{"index", s.index}, {"lambda", {s.lambda.lo.str(), s.lambda.hi.str()}}, {"coords", coords}});
    }
    emit({{"point", point_json(y)},
          {"stratum", *idx + 1},
          {"geo_count", st.geo_count},
          {"width", width.str()},
          {"real_count", secs.size()},
          {"sections", sj}});
  } else {
    std::cout << "point " << point_text(y) << " in stratum " << *idx + 1 << " (geometric count " << st.geo_count
              << ")\n";
    std::cout << secs.size() << " real sections\n";
    for (const auto& s : secs) {
      std::cout << "  " << s.index << ": lambda in [" << s.lambda.lo.str() << ", " << s.lambda.hi.str() << "]";
      for (std::size_t j = 0; j < s.coords.size(); ++j)
        std::cout << "  " << sf.vars[j] << " in [" << s.coords[j].lo.str() << ", " << s.coords[j].hi.str() << "]";
      std::cout << "\n";
    }
  }
  return 0;
}

// ---- collins -----------------------------------------------------------

int cmd_collins(const Config& cfg) {
  auto sf = qt::parse_system_file(read_text(cfg.input));
  std::string var = cfg.main_var.empty() ? sf.vars.back() : cfg.main_var;
  if (!sf.full_ring.index_of(var)) throw qt::Error(qt::ErrorKind::Domain, "main variable '" + var + "' is not declared");
  const qt::MPoly& A = sf.system[0];
  auto P = qt::projection_set(A, var);
  auto loci = qt::single_poly_strata(A, var);
  std::optional<qt::DelineabilityReport> probe;
  std::vector<std::map<std::string, qt::Rat>> pts;
  if (!cfg.samples.empty()) {
    std::istringstream in(read_text(cfg.samples));
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line.erase(0, line.find_first_not_of(" \t"));
      if (line.empty()) continue;
      line.erase(line.find_last_not_of(" \t") + 1);
      pts.push_back(qt::parse_point(line));
    }
    probe = qt::delineability_probe(A, var, {}, pts);
  }
  auto coeff_json = [&]() {
    json a = json::array();
    for (std::size_t k = 0; k < P.coefficients.size(); ++k)
      a.push_back({{"k", k}, {"poly", qt::print_poly(P.coefficients[k])}, {"zero", P.coefficients[k].is_zero()}});
    return a;
  };
  auto trunc_text = [&](const qt::UPoly<qt::MPoly>& b) { return qt::print_upoly(b, var, qt::print_poly); };
  if (cfg.format == "json") {
    json tr = json::array();
    for (const auto& b : P.truncations) tr.push_back(trunc_text(b));
    json strata = json::array();
    for (std::size_t k = 0; k < loci.size(); ++k)
      strata.push_back({{"name", "Y_" + std::to_string(k)},
                        {"equations", polys_json(loci[k].equations)},
                        {"nonvanish", qt::print_poly(loci[k].nonvanish)},
                        {"empty", loci[k].empty},
                        {"cylinder", loci[k].cylinder}});
    json out = {{"polynomial", qt::print_poly(A)},
                {"main_var", var},
                {"coefficients", coeff_json()},
                {"truncations", tr},
                {"subdiscs", polys_json(P.subdiscs)},
                {"projection_set", polys_json(P.polys())},
                {"strata", strata}};
    if (probe) {
      json sv = json::array();
      for (std::size_t i = 0; i < pts.size(); ++i)
        sv.push_back({{"point", point_json(pts[i])}, {"signs", probe->sign_vectors[i]}, {"real_count", probe->counts[i]}});
      out["probe"] = {{"one_cell", probe->one_cell},
                      {"constant_count", probe->constant_count},
                      {"common_count", probe->common_count ? json(*probe->common_count) : json(nullptr)},
                      {"message", probe->message},
                      {"samples", sv}};
    }
    emit(out);
    return 0;
  }
  std::cout << "A = " << qt::print_poly(A) << ", main variable " << var << "\n";
  std::cout << "coefficients:\n";
  for (std::size_t k = 0; k < P.coefficients.size(); ++k)
    std::cout << "  c_" << k << " = " << qt::print_poly(P.coefficients[k]) << (P.coefficients[k].is_zero() ? "  (zero)" : "")
              << "\n";
  std::cout << "truncations:\n";
  for (const auto& b : P.truncations) std::cout << "  " << trunc_text(b) << "\n";
  std::cout << "sub-discriminants:\n";
  for (const auto& s : P.subdiscs) std::cout << "  " << qt::print_poly(s) << "\n";
  std::cout << "coefficient strata:\n";
  for (std::size_t k = 0; k < loci.size(); ++k)
    std::cout << "  Y_" << k << ": " << conj(loci[k].equations) << ", " << qt::print_poly(loci[k].nonvanish) << " != 0"
              << (loci[k].empty ? "  [empty]" : "") << (loci[k].cylinder ? "  [cylinder]" : "") << "\n";
  if (probe) {
    std::cout << "probe: " << probe->message << "\n";
    for (std::size_t i = 0; i < pts.size(); ++i)
      std::cout << "  " << point_text(pts[i]) << ": real roots " << probe->counts[i] << "\n";
  }
  return 0;
}

int exit_code(qt::ErrorKind k) {
  switch (k) {
    case qt::ErrorKind::Parse:
    case qt::ErrorKind::Domain:
    case qt::ErrorKind::Precondition:
    case qt::ErrorKind::PointNotInStratum:
      return 2;
    default:
      return 3;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"Stratification of parametric polynomial systems by geometric fibre count"};
  app.require_subcommand(1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", cfg.input, "system file")->required();
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto* subres = app.add_subcommand("subres", "subresultant chain of the first two system polynomials");
  add_common(subres);
  subres->add_option("--main-var", cfg.main_var, "variable of the chain (default: last variable)");
  auto* rur = app.add_subcommand("rur", "rational univariate representation of a zero-dimensional system");
  add_common(rur);
  auto* strat = app.add_subcommand("stratify", "stratify the parameter space by geometric fibre count");
  add_common(strat);
  strat->add_option("--max-depth", cfg.max_depth, "recursion depth bound")->check(CLI::PositiveNumber);
  strat->add_option("--seed", cfg.seed, "seed for sample point probing");
  auto* fib = app.add_subcommand("fibers", "real fibre sections over a parameter point");
  add_common(fib);
  fib->add_option("--at", cfg.at, "parameter point, e.g. p=-3,q=2")->required();
  fib->add_option("--width", cfg.width, "coordinate enclosure width (binary rational)");
  fib->add_option("--max-depth", cfg.max_depth, "recursion depth bound")->check(CLI::PositiveNumber);
  auto* col = app.add_subcommand("collins", "Collins projection set of the first system polynomial");
  add_common(col);
  col->add_option("--main-var", cfg.main_var, "projection variable (default: last variable)");
  col->add_option("--samples", cfg.samples, "file with one parameter point per line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  cfg.command = app.get_subcommands().front()->get_name();
  try {
    if (cfg.command == "subres") return cmd_subres(cfg);
    if (cfg.command == "rur") return cmd_rur(cfg);
    if (cfg.command == "stratify") return cmd_stratify(cfg);
    if (cfg.command == "fibers") return cmd_fibers(cfg);
    if (cfg.command == "collins") return cmd_collins(cfg);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const qt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 1;
}
