#include <gtest/gtest.h>

#include "mpgerm/icis.hpp"
#include "mpgerm/parse.hpp"

using namespace mpgerm;

namespace {

LocalIdeal ideal(const VarSet::Ptr& v, std::initializer_list<std::string> gens) {
  std::vector<MultiPoly> g;
  for (const auto& s : gens) g.push_back(parse_poly(s, v));
  return LocalIdeal(v, std::move(g));
}

}  // namespace

TEST(Hypersurface, Basic) {
  auto v = VarSet::make({"x", "y"});
  EXPECT_EQ(milnor_hypersurface(parse_poly("x^2+y^2", v)), 1);
  EXPECT_EQ(milnor_hypersurface(parse_poly("x^3+y^3", v)), 4);
  EXPECT_EQ(milnor_hypersurface(parse_poly("x", v)), 0);
  EXPECT_THROW(milnor_hypersurface(parse_poly("x^2", v)), DomainError);
}

TEST(Hypersurface, BrieskornPham) {
  auto v = VarSet::make({"x", "y"});
  for (int a = 1; a <= 5; ++a)
    for (int b = 1; b <= 5; ++b) {
      auto g = parse_poly("x^" + std::to_string(a + 1) + "+y^" + std::to_string(b + 1), v);
      EXPECT_EQ(milnor_hypersurface(g), a * b) << a << "," << b;
    }
}

TEST(Icis, CurvesAndPoints) {
  auto v = VarSet::make({"x", "y1", "y2"});
  for (int k = 1; k <= 4; ++k) {
    auto I = ideal(v, {"y2", "y1^2 + x^" + std::to_string(k + 1)});
    EXPECT_EQ(milnor_icis(I, 1), k);
    auto c = classify(I, 1);
    EXPECT_EQ(c.kind, VarietyKind::Icis);
    auto m = milnor_data(c);
    EXPECT_EQ(m.mu, k);
    EXPECT_EQ(m.beta0, 1);
    EXPECT_EQ(m.mu_plus0, k + 1);
    EXPECT_EQ(m.mu_minus0, k - 1);
    EXPECT_EQ(m.mu_tilde, k);
  }
  auto w = VarSet::make({"y1", "x"});
  for (int k = 1; k <= 4; ++k) {
    auto I = ideal(w, {"y1", "x^" + std::to_string(k + 1)});
    EXPECT_EQ(milnor_icis(I, 0), k);
    auto m = milnor_data(I, 0);
    EXPECT_EQ(m.mu_plus0, static_cast<long>(*I.quotient_dimension()));
  }
}

TEST(Icis, SmoothGerm) {
  auto v = VarSet::make({"x1", "x2", "x3"});
  auto I = ideal(v, {"x1"});
  EXPECT_EQ(milnor_icis(I, 2), 0);
  auto c = classify(I, 2);
  EXPECT_EQ(c.kind, VarietyKind::Smooth);
  EXPECT_EQ(c.dim, 2);
}

TEST(Icis, ChainIndependence) {
  auto v = VarSet::make({"x", "y", "z"});
  std::vector<LocalIdeal> corpus{
      ideal(v, {"x^2 + y^3 + z^4", "x*y + z^3"}),
      ideal(v, {"x*y + z^2", "x^2 + y^2 + z^3"}),
      ideal(v, {"x^3 + y^2 + z^2"}),
  };
  for (const auto& I : corpus) {
    int dim = static_cast<int>(I.nvars() - I.generators().size());
    auto base = milnor_icis(I, dim);
    ASSERT_TRUE(base.has_value());
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ChainOptions opt;
      opt.seed = seed;
      opt.randomize_first = true;
      EXPECT_EQ(milnor_icis(I, dim, opt), base);
    }
  }
}

TEST(Classify, EmptyAndIsolated) {
  auto v = VarSet::make({"x", "y"});
  auto e = classify(ideal(v, {"1 + x", "y"}), 0);
  EXPECT_EQ(e.kind, VarietyKind::Empty);
  EXPECT_EQ(milnor_data(e), MilnorData{});
  auto p = classify(ideal(v, {"x", "y^2", "x*y"}), -1);
  EXPECT_EQ(p.kind, VarietyKind::IsolatedPoints);
  auto m = milnor_data(p);
  EXPECT_EQ(m.mu_tilde, -1);
  EXPECT_EQ(m.beta0, 1);
  auto bad = classify(ideal(v, {"x*y"}), 0);
  EXPECT_EQ(bad.kind, VarietyKind::NotIcis);
  EXPECT_THROW(milnor_data(bad), NotAFinite);
  EXPECT_THROW(classify(ideal(v, {"x"}), 3), DomainError);
}

TEST(Classify, RedundantGenerators) {
  auto v = VarSet::make({"x", "y", "z"});
  auto I = ideal(v, {"x", "x + y^2 - z^3", "y^2 - z^3", "x*z"});
  auto c = classify(I, 1);
  EXPECT_EQ(c.kind, VarietyKind::Icis);
  EXPECT_EQ(c.mu, 2);
}
