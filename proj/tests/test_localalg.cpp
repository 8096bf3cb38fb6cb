#include <gtest/gtest.h>

#include <random>

#include "mpgerm/localalg.hpp"
#include "mpgerm/parse.hpp"

using namespace mpgerm;

namespace {

LocalIdeal ideal(const VarSet::Ptr& v, std::initializer_list<const char*> gens) {
  std::vector<MultiPoly> g;
  for (auto s : gens) g.push_back(parse_poly(s, v));
  return LocalIdeal(v, std::move(g));
}

Monomial mono(std::initializer_list<unsigned> e) {
  Monomial m(e.size());
  std::size_t i = 0;
  for (auto x : e) m.set(i++, x);
  return m;
}

}  // namespace

TEST(LocalOrder, OneIsMaximal) {
  EXPECT_TRUE(LocalOrder::greater(mono({0, 0}), mono({1, 0})));
  EXPECT_TRUE(LocalOrder::greater(mono({1, 0}), mono({2, 0})));
  EXPECT_TRUE(LocalOrder::greater(mono({1, 0}), mono({0, 1})));
}

TEST(LocalOrder, MultiplicativeProperty) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 2000; ++t) {
    Monomial a(4), b(4), c(4);
    for (std::size_t i = 0; i < 4; ++i) {
      a.set(i, rng() % 4);
      b.set(i, rng() % 4);
      c.set(i, rng() % 4);
    }
    int ab = LocalOrder::compare(a, b);
    EXPECT_EQ(ab, LocalOrder::compare(a * c, b * c));
    EXPECT_EQ(ab, -LocalOrder::compare(b, a));
    if (!c.is_one()) EXPECT_TRUE(LocalOrder::greater(a, a * c));
  }
}

TEST(StandardBasis, LocalVersusGlobal) {
  auto v = VarSet::make({"x"});
  auto I = ideal(v, {"x - x^2"});
  EXPECT_FALSE(I.contains_unit());
  EXPECT_EQ(I.quotient_dimension(), 1u);
  ASSERT_EQ(I.leading_monomials().size(), 1u);
  EXPECT_EQ(I.leading_monomials()[0], mono({1}));
  EXPECT_TRUE(I.contains(parse_poly("x", v)));
}

TEST(StandardBasis, ScaledVariables) {
  auto v = VarSet::make({"x", "y"});
  auto I = ideal(v, {"2*x", "2*y"});
  EXPECT_EQ(I.quotient_dimension(), 1u);
  EXPECT_EQ(I.krull_dimension(), 0);
}

TEST(StandardBasis, UnitGenerator) {
  auto v = VarSet::make({"x"});
  auto I = ideal(v, {"1 + x"});
  EXPECT_TRUE(I.contains_unit());
  EXPECT_EQ(I.krull_dimension(), -1);
  EXPECT_EQ(I.quotient_dimension(), 0u);
}

TEST(NormalForm, Membership) {
  auto v = VarSet::make({"x", "y"});
  auto I = ideal(v, {"x"});
  EXPECT_TRUE(I.normal_form(parse_poly("x^2", v)).is_zero());
  EXPECT_EQ(I.normal_form(parse_poly("y", v)), parse_poly("y", v));
  EXPECT_FALSE(I.contains_unit());
  EXPECT_FALSE(ideal(v, {"x", "y"}).contains_unit());
  EXPECT_FALSE(ideal(v, {"x - x^2"}).contains_unit());
}

TEST(Dimension, Counts) {
  auto v3 = VarSet::make({"a", "b", "c"});
  EXPECT_EQ(LocalIdeal(v3, {}).krull_dimension(), 3);
  EXPECT_FALSE(LocalIdeal(v3, {}).quotient_dimension().has_value());
  auto v2 = VarSet::make({"x", "y"});
  EXPECT_EQ(ideal(v2, {"3*x^2", "3*y^2"}).quotient_dimension(), 4u);
  EXPECT_EQ(ideal(v2, {"x*y"}).krull_dimension(), 1);
  for (int k = 1; k <= 6; ++k) {
    auto v = VarSet::make({"y1", "x"});
    LocalIdeal I(v, {parse_poly("y1", v), parse_poly("x^" + std::to_string(k + 1), v)});
    EXPECT_EQ(I.quotient_dimension(), static_cast<std::uint64_t>(k + 1));
  }
}

TEST(StandardBasis, SoundAndComplete) {
  // Every generator and every S-polynomial of the basis reduces to zero.
  auto v = VarSet::make({"x", "y", "z"});
  std::vector<LocalIdeal> cases{
      ideal(v, {"x^2 + y^3 - z", "x*y + z^2", "y^2 - x*z + x^3"}),
      ideal(v, {"x - y^2 + x*z", "y^3 - z^2", "x*y*z + z^4"}),
      ideal(v, {"x^3 + y^3 + z^3", "x*y*z"}),
  };
  for (const auto& I : cases) {
    const auto& basis = I.standard_basis();
    LocalIdeal B(v, basis);
    for (const auto& g : I.generators()) EXPECT_TRUE(I.contains(g)) << to_string(g);
    for (const auto& b : basis) EXPECT_TRUE(LocalIdeal(v, I.generators()).contains(b));
    std::vector<detail::LPoly> lb;
    for (const auto& b : basis) lb.push_back(detail::to_local(b));
    for (std::size_t i = 0; i < lb.size(); ++i)
      for (std::size_t j = i + 1; j < lb.size(); ++j) {
        StepBudget budget;
        EXPECT_TRUE(detail::mora_nf(detail::spoly(lb[i], lb[j]), lb, budget).zero());
      }
    // Idempotence: the basis of the basis has the same leading ideal.
    EXPECT_EQ(B.leading_monomials(), I.leading_monomials());
  }
}

TEST(StandardBasis, BudgetIsReported) {
  auto v = VarSet::make({"x", "y", "z"});
  std::vector<MultiPoly> g{parse_poly("x^5 + y^7 + z^4 + x*y*z", v), parse_poly("x^3*y - z^5 + y^4", v)};
  LocalIdeal I(v, g, 3);
  EXPECT_THROW(I.standard_basis(), ResourceLimit);
}

TEST(StandardBasis, ZeroGeneratorsDropped) {
  auto v = VarSet::make({"x"});
  LocalIdeal I(v, {MultiPoly(v), parse_poly("x", v)});
  EXPECT_EQ(I.generators().size(), 1u);
}
