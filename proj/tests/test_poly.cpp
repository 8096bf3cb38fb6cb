#include <gtest/gtest.h>

#include <random>

#include "mpgerm/parse.hpp"
#include "mpgerm/poly.hpp"

using namespace mpgerm;

namespace {

VarSet::Ptr xy4() {
  return VarSet::make({"x1", "x2", "x3", "x4", "y1", "y2", "y3"},
                      {VarRole::base, VarRole::base, VarRole::base, VarRole::base, VarRole::corank,
                       VarRole::corank, VarRole::corank});
}

MultiPoly P(const std::string& s, const VarSet::Ptr& v) { return parse_poly(s, v); }

}  // namespace

TEST(Parse, SimpleTerms) {
  auto v = VarSet::make({"x1", "x2", "x3", "x4", "y"});
  auto p = P("y^3+x1*y", v);
  EXPECT_EQ(p.term_count(), 2u);
  Monomial y3(5), x1y(5);
  y3.set(4, 3);
  x1y.set(0, 1);
  x1y.set(4, 1);
  EXPECT_EQ(p.coefficient(y3), 1);
  EXPECT_EQ(p.coefficient(x1y), 1);
}

TEST(Parse, Zero) {
  auto v = VarSet::make({"x"});
  EXPECT_TRUE(P("0", v).is_zero());
  EXPECT_TRUE(P("x - x", v).is_zero());
}

TEST(Parse, SyntaxErrorOffset) {
  auto v = VarSet::make({"y"});
  try {
    P("y^^2", v);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Parse, UnknownVariable) {
  auto v = VarSet::make({"x"});
  EXPECT_THROW(P("x + z", v), ParseError);
  EXPECT_THROW(P("(x", v), ParseError);
  EXPECT_THROW(P("1/0", v), ParseError);
  EXPECT_THROW(P("", v), ParseError);
}

TEST(Parse, RationalsAndPrecedence) {
  auto v = VarSet::make({"x", "y"});
  EXPECT_EQ(P("-x^2", v), -P("x*x", v));
  EXPECT_EQ(P("2/4*x", v), P("1/2 * x", v));
  EXPECT_EQ(P("(x+y)^2", v), P("x^2 + 2*x*y + y^2", v));
  EXPECT_EQ(P("x - -y", v), P("x + y", v));
  EXPECT_EQ(to_string(P("-1/2*x^2 + 3 - y", v)), "-1/2*x^2 - y + 3");
}

TEST(Arith, SubstituteAndDerivative) {
  auto v = VarSet::make({"x1", "y1"});
  auto p = P("x1+y1^2", v);
  EXPECT_EQ(substitute(p, {{"y1", MultiPoly(v)}}), P("x1", v));
  auto w = VarSet::make({"x1", "y"});
  EXPECT_EQ(derivative(P("y^3+x1*y", w), "y"), P("3*y^2+x1", w));
}

TEST(Arith, ProductMatchesDifference) {
  auto v = xy4();
  auto lhs = P("y2-y1", v) * P("x1+y1^2+y1*y2+y2^2", v);
  EXPECT_EQ(lhs, P("(y2^3+x1*y2)-(y1^3+x1*y1)", v));
}

TEST(Arith, MismatchedVariables) {
  auto a = VarSet::make({"x"});
  auto b = VarSet::make({"y"});
  EXPECT_THROW(P("x", a) + P("y", b), VarSetMismatch);
}

TEST(DividedDifference, Examples) {
  auto v = xy4();
  EXPECT_EQ(divided_difference(P("y1^3+x1*y1", v), "y1", "y2"), P("x1+y1^2+y1*y2+y2^2", v));
  EXPECT_EQ(divided_difference(P("x4*y1+x1*y1^2", v), "y1", "y2"), P("x4+x1*(y1+y2)", v));
  EXPECT_TRUE(divided_difference(P("7", v), "y1", "y2").is_zero());
  EXPECT_EQ(divided_difference(P("x1+y1^2+y1*y2+y2^2", v), "y2", "y3"), P("y1+y2+y3", v));
}

namespace {

MultiPoly random_poly(std::mt19937_64& rng, const VarSet::Ptr& v, int terms, int maxexp) {
  MultiPoly p(v);
  for (int t = 0; t < terms; ++t) {
    Monomial m(v->size());
    for (std::size_t i = 0; i < v->size(); ++i) m.set(i, rng() % (maxexp + 1));
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 4) + 1;
    p.add_term(m, Rational(num, den));
  }
  return p;
}

}  // namespace

TEST(DividedDifference, ReconstructionProperty) {
  auto v = xy4();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = random_poly(rng, v, 6, 3);
    std::size_t a = 4 + rng() % 3, b = 4 + rng() % 3;
    if (a == b) continue;
    auto dd = divided_difference(h, a, b);
    auto diff = MultiPoly::variable(v, b) - MultiPoly::variable(v, a);
    auto swapped = substitute(h, {{v->name(a), MultiPoly::variable(v, b)}});
    EXPECT_EQ(diff * dd + h, swapped);
  }
}

TEST(DividedDifference, IteratedDifferencesAreSymmetric) {
  auto v = xy4();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = random_poly(rng, v, 5, 4);
    // Keep only y1 among the corank variables.
    auto h = substitute(r, {{"y2", MultiPoly(v)}, {"y3", MultiPoly(v)}});
    auto d2 = divided_difference(h, "y1", "y2");
    EXPECT_EQ(substitute(d2, {{"y1", P("y2", v)}, {"y2", P("y1", v)}}), d2);
    auto d3 = divided_difference(d2, "y2", "y3");
    for (auto [a, b] : {std::pair{"y1", "y2"}, std::pair{"y1", "y3"}, std::pair{"y2", "y3"}}) {
      auto swapped = substitute(d3, {{a, P(b, v)}, {b, P(a, v)}});
      EXPECT_EQ(swapped, d3);
    }
  }
}

TEST(Print, RoundTrip) {
  auto v = xy4();
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_poly(rng, v, 1 + rng() % 8, 4);
    auto q = P(to_string(p), v);
    EXPECT_EQ(p, q);
    EXPECT_EQ(to_string(q), to_string(p));
  }
}
