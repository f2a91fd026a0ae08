#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

namespace {

struct Diag {
  int line = 0, col = 0;
  std::string msg;
};

Diag parse_error(const std::string& text, const Ring& r) {
  try {
    qt::parse_poly(text, r);
  } catch (const qt::ParseError& e) {
    return {e.line(), e.column(), e.message()};
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

}  // namespace

TEST(ParsePoly, CubicFromText) {
  Ring r({"p", "q", "x"});
  auto f = qt::parse_poly("x^3 + p*x + q", r);
  auto x = MPoly::variable(r, "x"), p = MPoly::variable(r, "p"), q = MPoly::variable(r, "q");
  EXPECT_EQ(f, x * x * x + p * x + q);
}

TEST(ParsePoly, UnaryMinusAndExpansion) {
  Ring r({"x", "y"});
  auto x = MPoly::variable(r, "x"), y = MPoly::variable(r, "y");
  auto one = MPoly::constant(r, Rat(1));
  EXPECT_EQ(qt::parse_poly("-(y - 1)^2 + x", r), x - y * y + y.scale(Rat(2)) - one);
  EXPECT_EQ(qt::parse_poly("-x^2", r), -(x * x));
  EXPECT_EQ(qt::parse_poly("3/6*x", r), x.scale(Rat(1, 2)));
  EXPECT_EQ(qt::parse_poly("x*-y", r), -(x * y));
}

TEST(ParsePoly, DistinctDiagnostics) {
  Ring r({"x", "y"});
  auto neg = parse_error("x^-1", r);
  EXPECT_NE(neg.msg.find("negative exponent"), std::string::npos);
  EXPECT_EQ(neg.col, 3);
  auto frac = parse_error("x^1/2", r);
  EXPECT_NE(frac.msg.find("fractional exponent"), std::string::npos);
  auto unk = parse_error("x + zz", r);
  EXPECT_NE(unk.msg.find("unknown variable 'zz'"), std::string::npos);
  EXPECT_EQ(unk.col, 5);
  auto open = parse_error("(x + y", r);
  EXPECT_NE(open.msg.find("unbalanced"), std::string::npos);
  auto close = parse_error("x + y)", r);
  EXPECT_NE(close.msg.find("unbalanced"), std::string::npos);
  EXPECT_EQ(close.col, 6);
  auto implicit = parse_error("2x", r);
  EXPECT_NE(implicit.msg.find("implicit multiplication"), std::string::npos);
  EXPECT_EQ(neg.line, 1);
}

TEST(PrintPoly, Canonical) {
  Ring pq({"p", "q"});
  EXPECT_EQ(qt::print_poly(qt::parse_poly("27*q^2 + 4*p^3", pq)), "4*p^3 + 27*q^2");
  EXPECT_EQ(qt::print_poly(MPoly(pq)), "0");
  Ring r({"x", "y"});
  auto f = qt::parse_poly("x - y^2", r);
  EXPECT_EQ(qt::print_poly(f), "-y^2 + x");
  EXPECT_EQ(qt::parse_poly(qt::print_poly(f), r), f);
  EXPECT_EQ(qt::print_poly(qt::parse_poly("-1/2*x*y + 3", r)), "-1/2*x*y + 3");
}

TEST(PrintPoly, RoundTripCorpus) {
  std::mt19937_64 rng(2024);
  Ring r({"a", "b", "x1", "y_2"});
  for (int k = 0; k < 1000; ++k) {
    auto f = random_mpoly(rng, r, 1 + k % 7, 1 + k % 5, 50);
    auto s = qt::print_poly(f);
    EXPECT_EQ(s.find("+ -"), std::string::npos);
    ASSERT_EQ(qt::parse_poly(s, r), f) << s;
  }
}

TEST(ParsePoly, FuzzCorpusAlwaysPositioned) {
  Ring r({"x", "y"});
  const std::string alphabet = "xy0123456789+-*^/() .#z";
  std::mt19937_64 rng(99);
  int rejected = 0;
  for (int k = 0; k < 3000; ++k) {
    std::string s;
    std::size_t len = 1 + rng() % 12;
    for (std::size_t i = 0; i < len; ++i) s += alphabet[rng() % alphabet.size()];
    try {
      qt::parse_poly(s, r);
    } catch (const qt::ParseError& e) {
      ++rejected;
      EXPECT_GE(e.column(), 1);
      EXPECT_LE(e.column(), static_cast<int>(s.size()) + 1);
      EXPECT_EQ(e.line(), 1);
    }
  }
  EXPECT_GT(rejected, 1000);
}

TEST(SystemFile, CubicFixture) {
  auto sf = qt::parse_system_file(read_file(fixture("cubic.sys")));
  EXPECT_EQ(sf.params, (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(sf.vars, (std::vector<std::string>{"x"}));
  ASSERT_EQ(sf.base.size(), 1u);
  ASSERT_EQ(sf.system.size(), 1u);
  EXPECT_EQ(qt::print_poly(sf.base[0]), "4*p^3 + 27*q^2");
  EXPECT_EQ(qt::print_poly(sf.system[0]), "x^3 + p*x + q");
}

TEST(SystemFile, EmptyBaseAndCrlf) {
  auto sf = qt::parse_system_file("params: t\r\nvars: x\r\nbase:\r\n# nothing\r\nsystem:\r\n x^2 - t  # comment\r\n");
  EXPECT_TRUE(sf.base.empty());
  ASSERT_EQ(sf.system.size(), 1u);
  EXPECT_EQ(qt::print_poly(sf.system[0]), "x^2 - t");
}

TEST(SystemFile, InlineSectionContent) {
  auto sf = qt::parse_system_file("params: a\nvars: x, y\nsystem: x - a\n  y^2 - x\n");
  EXPECT_EQ(sf.system.size(), 2u);
}

TEST(SystemFile, Rejections) {
  auto code = [](const std::string& text) -> std::string {
    try {
      qt::parse_system_file(text);
    } catch (const qt::ParseError& e) {
      return std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message();
    }
    return "accepted";
  };
  EXPECT_NE(code("params: t\nvars: x\nbase: x^2\nsystem:\nx-t\n").find("base section"), std::string::npos);
  EXPECT_EQ(code("params: t\nvars: x\nbase: x^2\nsystem:\nx-t\n").rfind("3:7:", 0), 0u);
  EXPECT_NE(code("params: t\nsystem:\nx-t\n").find("missing 'vars:'"), std::string::npos);
  EXPECT_NE(code("params: t\nvars: x\n").find("missing 'system:'"), std::string::npos);
  EXPECT_NE(code("params: t\nvars: t\nsystem:\nt\n").find("both"), std::string::npos);
  EXPECT_NE(code("params: 1t\nvars: x\nsystem:\nx\n").find("invalid name"), std::string::npos);
  EXPECT_EQ(code("vars: x\nsystem:\nx^-2\n").rfind("3:3:", 0), 0u);
}

TEST(ParsePoint, Examples) {
  auto pt = qt::parse_point("p=-3,q=2/4");
  EXPECT_EQ(pt.at("p"), Rat(-3));
  EXPECT_EQ(pt.at("q"), Rat(1, 2));
  EXPECT_THROW(qt::parse_point("p"), qt::ParseError);
  EXPECT_THROW(qt::parse_point("p=abc"), qt::ParseError);
}
