#pragma once

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qetale/polynomial.hpp"
#include "qetale/ratfun.hpp"
#include "qetale/upoly.hpp"

namespace qetale {

namespace detail {

// Recursive-descent parser for
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | factor
//   factor := base ('^' uint)?
//   base   := name | integer ('/' integer)? | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, const Ring& ring, int line, int col0,
             const std::set<std::string>* forbidden = nullptr)
      : s_(text), ring_(ring), line_(line), col0_(col0), forbidden_(forbidden) {}

  MPoly parse() {
    skip_ws();
    if (at_end()) error(pos_, "empty expression");
    MPoly p = expr();
    skip_ws();
    if (!at_end()) {
      if (peek() == ')') error(pos_, "unbalanced parentheses: unexpected ')'");
      if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '(' || std::isdigit(static_cast<unsigned char>(peek())))
        error(pos_, "implicit multiplication is not allowed; use '*'");
      error(pos_, std::string("unexpected character '") + peek() + "'");
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }
  [[noreturn]] void error(std::size_t at, const std::string& msg) const {
    throw ParseError(line_, col0_ + static_cast<int>(at), msg);
  }

  MPoly expr() {
    MPoly acc = term();
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      MPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      acc = acc * unary();
    }
    return acc;
  }

  MPoly unary() {
    skip_ws();
    if (!at_end() && peek() == '-') {
      ++pos_;
      return -unary();
    }
    return factor();
  }

  MPoly factor() {
    MPoly b = base();
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      if (at_end()) error(start, "missing exponent");
      if (peek() == '-') error(start, "negative exponent");
      if (!std::isdigit(static_cast<unsigned char>(peek()))) error(start, "malformed exponent");
      std::string digits;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) digits += s_[pos_++];
      if (!at_end() && (peek() == '.' || peek() == '/')) error(start, "fractional exponent");
      if (digits.size() > 6) error(start, "exponent too large");
      b = b.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return b;
  }

  MPoly base() {
    skip_ws();
    if (at_end()) error(pos_, "unexpected end of expression");
    char c = peek();
    std::size_t start = pos_;
    if (c == '(') {
      ++pos_;
      MPoly e = expr();
      skip_ws();
      if (at_end() || peek() != ')') error(start, "unbalanced parentheses: missing ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) num += s_[pos_++];
      if (!at_end() && peek() == '.') error(pos_, "decimal literals are not supported; use a/b");
      std::string den = "1";
      if (!at_end() && peek() == '/') {
        ++pos_;
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          error(pos_, "malformed rational literal");
        den.clear();
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) den += s_[pos_++];
        if (BigInt(den, 10) == 0) error(start, "zero denominator in rational literal");
      }
      return MPoly::constant(ring_, Rat(BigInt(num, 10), BigInt(den, 10)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) name += s_[pos_++];
      if (forbidden_ && forbidden_->count(name))
        error(start, "variable '" + name + "' is not allowed here");
      auto idx = ring_.index_of(name);
      if (!idx) error(start, "unknown variable '" + name + "'");
      return MPoly::variable(ring_, *idx);
    }
    if (c == ')') error(start, "unbalanced parentheses: unexpected ')'");
    error(start, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  const Ring& ring_;
  int line_;
  int col0_;
  const std::set<std::string>* forbidden_;
  std::size_t pos_ = 0;
};

inline bool valid_name(std::string_view n) {
  if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0]))) return false;
  for (char c : n)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace detail

inline MPoly parse_poly(std::string_view text, const Ring& ring) {
  return detail::PolyParser(text, ring, 1, 1).parse();
}

/// Canonical text: descending monomial order, explicit '*' and '^'.
inline std::string print_poly(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rat c = t.coeff;
    bool neg = c.sign() < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += f.ring().name(i);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out += c.str();
    else if (c.is_one())
      out += mono;
    else
      out += c.str() + "*" + mono;
  }
  return out;
}

inline std::string print_ratfun(const RatFun& r) {
  if (r.is_polynomial()) return print_poly(r.num());
  return "(" + print_poly(r.num()) + ")/(" + print_poly(r.den()) + ")";
}

/// Prints a univariate polynomial in `var`, coefficients printed by `coeff`.
template <class D, class F>
std::string print_upoly(const UPoly<D>& u, const std::string& var, F&& coeff) {
  if (u.is_zero()) return "0";
  std::string out;
  for (std::size_t k = u.coeffs().size(); k-- > 0;) {
    const D& c = u.coeffs()[k];
    if (domain_traits<D>::is_zero(c)) continue;
    std::string cs = coeff(c);
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string piece;
    if (mono.empty()) piece = cs;
    else if (cs == "1") piece = mono;
    else if (cs == "-1") piece = "-" + mono;
    else if (cs.find_first_of("+- ", 1) != std::string::npos) piece = "(" + cs + ")*" + mono;
    else piece = cs + "*" + mono;
    if (out.empty()) {
      out = piece;
    } else if (piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

inline std::string print_qpoly(const UPoly<Rat>& u, const std::string& var = "lambda") {
  return print_upoly(u, var, [](const Rat& r) { return r.str(); });
}

/// Parsed system definition: base scheme Y = V(base) in the parameters and
/// the ideal `system` in parameters plus fibre variables.
struct SystemFile {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  Ring param_ring;
  Ring full_ring;
  std::vector<MPoly> base;
  std::vector<MPoly> system;
  std::map<std::string, std::string> options;
};

inline SystemFile parse_system_file(std::string_view text) {
  enum class Section { None, Params, Vars, Base, System, Options };
  SystemFile sf;
  bool saw_vars = false, saw_system = false, saw_params = false;
  struct PolyLine {
    std::string text;
    int line, col;
  };
  std::vector<PolyLine> base_lines, system_lines;
  Section sec = Section::None;

  auto add_names = [&](std::vector<std::string>& dst, const std::string& body, int line, int col) {
    std::string cur;
    int start = col;
    for (std::size_t i = 0; i <= body.size(); ++i) {
      char c = i < body.size() ? body[i] : ',';
      if (c == ',' || c == ' ' || c == '\t') {
        if (!cur.empty()) {
          if (!detail::valid_name(cur)) throw ParseError(line, start, "invalid name '" + cur + "'");
          dst.push_back(cur);
          cur.clear();
        }
        start = col + static_cast<int>(i) + 1;
      } else {
        cur += c;
      }
    }
  };

  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::size_t b = line.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    std::size_t e = line.find_last_not_of(" \t");
    std::string body = line.substr(b, e - b + 1);
    int col = static_cast<int>(b) + 1;

    auto colon = body.find(':');
    if (colon != std::string::npos) {
      std::string key = body.substr(0, colon);
      Section next = Section::None;
      if (key == "params") next = Section::Params;
      else if (key == "vars") next = Section::Vars;
      else if (key == "base") next = Section::Base;
      else if (key == "system") next = Section::System;
      else if (key == "options") next = Section::Options;
      if (next != Section::None) {
        sec = next;
        if (sec == Section::Params) saw_params = true;
        if (sec == Section::Vars) saw_vars = true;
        if (sec == Section::System) saw_system = true;
        std::string rest = body.substr(colon + 1);
        std::size_t rb = rest.find_first_not_of(" \t");
        if (rb == std::string::npos) continue;
        col += static_cast<int>(colon + 1 + rb);
        body = rest.substr(rb);
      }
    }
    switch (sec) {
      case Section::None:
        throw ParseError(lineno, col, "content before any section header");
      case Section::Params: add_names(sf.params, body, lineno, col); break;
      case Section::Vars: add_names(sf.vars, body, lineno, col); break;
      case Section::Base: base_lines.push_back({body, lineno, col}); break;
      case Section::System: system_lines.push_back({body, lineno, col}); break;
      case Section::Options: {
        auto sep = body.find_first_of("=:");
        if (sep == std::string::npos) throw ParseError(lineno, col, "option lines are 'key = value'");
        auto trim = [](std::string s) {
          auto a = s.find_first_not_of(" \t");
          auto z = s.find_last_not_of(" \t");
          return a == std::string::npos ? std::string() : s.substr(a, z - a + 1);
        };
        sf.options[trim(body.substr(0, sep))] = trim(body.substr(sep + 1));
        break;
      }
    }
  }
  (void)saw_params;
  if (!saw_vars) throw ParseError(lineno, 1, "missing 'vars:' section");
  if (!saw_system) throw ParseError(lineno, 1, "missing 'system:' section");
  if (sf.vars.empty()) throw ParseError(lineno, 1, "'vars:' section lists no variables");

  std::set<std::string> pset(sf.params.begin(), sf.params.end()), vset(sf.vars.begin(), sf.vars.end());
  if (pset.size() != sf.params.size()) throw ParseError(1, 1, "duplicate parameter name");
  if (vset.size() != sf.vars.size()) throw ParseError(1, 1, "duplicate variable name");
  for (const auto& v : sf.vars)
    if (pset.count(v)) throw ParseError(1, 1, "'" + v + "' declared both as parameter and variable");

  sf.param_ring = Ring(sf.params);
  std::vector<std::string> all = sf.params;
  all.insert(all.end(), sf.vars.begin(), sf.vars.end());
  sf.full_ring = Ring(all);
  for (const auto& pl : base_lines) {
    try {
      sf.base.push_back(detail::PolyParser(pl.text, sf.param_ring, pl.line, pl.col, &vset).parse());
    } catch (const ParseError& e) {
      if (e.message().find("is not allowed here") != std::string::npos)
        throw ParseError(e.line(), e.column(), "base section: polynomial mentions a fibre variable");
      throw;
    }
  }
  for (const auto& pl : system_lines)
    sf.system.push_back(detail::PolyParser(pl.text, sf.full_ring, pl.line, pl.col).parse());
  if (sf.system.empty()) throw ParseError(lineno, 1, "'system:' section is empty");
  return sf;
}

/// Parses "p=-3,q=2" into an assignment.
inline std::map<std::string, Rat> parse_point(std::string_view text) {
  std::map<std::string, Rat> out;
  std::size_t pos = 0;
  int col = 1;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string item(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError(1, col, "expected name=rational");
    std::string name = item.substr(0, eq);
    if (!detail::valid_name(name)) throw ParseError(1, col, "invalid name '" + name + "'");
    try {
      out[name] = Rat::parse(item.substr(eq + 1));
    } catch (const Error&) {
      throw ParseError(1, col + static_cast<int>(eq) + 1, "malformed rational '" + item.substr(eq + 1) + "'");
    }
    col += static_cast<int>(item.size()) + 1;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace qetale
