#include <gtest/gtest.h>

#include <fstream>

#include "mpgerm/invariants.hpp"

using namespace mpgerm;

namespace {

std::string sample(const std::string& name) { return std::string(MPGERM_SAMPLES) + "/" + name; }
std::string fixture(const std::string& name) { return std::string(MPGERM_FIXTURES) + "/" + name; }

InvariantReport report(const std::string& file) { return compute_invariants(analyze_germ(load_germ(sample(file)))); }

std::vector<std::pair<int, int>> positions(const InvariantReport& r) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : r.icss) out.push_back({e.r, e.q});
  return out;
}

}  // namespace

TEST(MuAlt, SkFamily) {
  for (int k = 1; k <= 4; ++k) {
    auto v = analyze_germ(load_germ(sample("s" + std::to_string(k) + ".germ")));
    auto m = mu_alt_dk(v, 2);
    EXPECT_EQ(m.value, k);
    EXPECT_EQ(m.formula_betti, m.formula_pm);
    auto r = compute_invariants(v);
    EXPECT_EQ(r.mu_I, k);
    EXPECT_EQ(r.nu_I, k);
    auto t = character_table_symmetric(2);
    EXPECT_EQ(mu_k_tau(v, 2, t, t.irrep_index("Alt")), k);
  }
}

TEST(MuAlt, KnownPlaneCurveGerms) {
  EXPECT_EQ(report("h2.germ").mu_I, 2);
  EXPECT_EQ(report("b2.germ").mu_I, 2);
  EXPECT_EQ(report("cross_cap.germ").mu_I, 0);
}

TEST(MuAlt, AltAgreesWithTauSolverForAllK) {
  for (const char* f : {"s3.germ", "h2.germ", "houston.germ", "disgusting.germ"}) {
    auto v = analyze_germ(load_germ(sample(f)));
    for (int k = 2; k <= v.d_of_f; ++k) {
      auto t = character_table_symmetric(k);
      EXPECT_EQ(mu_k_tau(v, k, t, t.irrep_index("Alt")), mu_alt_dk(v, k).value) << f << " k=" << k;
    }
  }
}

TEST(MuI, StableAndStronglyContractibleVanish) {
  for (const char* f : {"cross_cap.germ", "n2n1.germ", "umbrella35.germ", "disgusting.germ"}) {
    auto r = report(f);
    EXPECT_EQ(r.mu_I, 0) << f;
    EXPECT_TRUE(r.icss.empty()) << f;
  }
}

// The reference value counts two 2-spheres and two 3-spheres. The multiple
// point spaces computed here give mu_2^Alt = 1 and mu_3^Alt = 2.
TEST(MuI, HoustonGerm) {
  auto r = report("houston.germ");
  EXPECT_EQ(r.mu_I, 4);
  EXPECT_EQ(r.nu_I, 0);
}

TEST(MuI, HoustonGermComputedParts) {
  auto r = report("houston.germ");
  ASSERT_EQ(r.mu_alt.size(), 2u);
  EXPECT_EQ(r.mu_alt[0].value, 1);
  EXPECT_EQ(r.mu_alt[1].value, 2);
  EXPECT_EQ(r.top_term, 0);
}

TEST(MuI, NotAFiniteThrows) {
  auto v = analyze_germ(load_germ(fixture("triple_line.germ")));
  EXPECT_THROW(compute_invariants(v), NotAFinite);
}

TEST(MuI, TopTerm) {
  EXPECT_EQ(mu_top_term(1, 2), 0);
  EXPECT_EQ(mu_top_term(3, 1), 2);
  EXPECT_EQ(mu_top_term(4, 2), 3);
  EXPECT_THROW(mu_top_term(0, 1), DomainError);
}

TEST(Icss, Layouts) {
  EXPECT_EQ(icss_layout(5, 6), (std::vector<std::pair<int, int>>{{1, 5}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 0}}));
  EXPECT_EQ(icss_layout(7, 9), (std::vector<std::pair<int, int>>{{1, 6}, {2, 4}, {3, 2}, {4, 0}}));
}

TEST(Icss, EntriesSitOnLayout) {
  for (const char* f : {"s2.germ", "h2.germ", "houston.germ"}) {
    auto r = report(f);
    auto layout = icss_layout(r.n, r.p);
    for (auto pos : positions(r))
      EXPECT_NE(std::find(layout.begin(), layout.end(), pos), layout.end()) << f;
  }
  auto h = report("houston.germ");
  EXPECT_EQ(positions(h), (std::vector<std::pair<int, int>>{{1, 3}, {2, 1}}));
  EXPECT_EQ(h.image_betti, (std::map<int, long>{{3, 1}, {2, 2}}));
}

TEST(NoUnexpected, Predicate) {
  EXPECT_TRUE(no_unexpected_deformations(analyze_germ(load_germ(sample("s2.germ")))));
  EXPECT_FALSE(no_unexpected_deformations(analyze_germ(load_germ(sample("disgusting.germ")))));
  EXPECT_TRUE(no_unexpected_deformations(analyze_germ(load_germ(sample("n2n1.germ")))));
}

TEST(SingIffAlt, CellWise) {
  for (const char* f : {"s1.germ", "s3.germ", "h2.germ", "b2.germ", "cross_cap.germ", "disgusting.germ",
                        "n2n1.germ", "houston.germ", "umbrella35.germ"}) {
    auto v = analyze_germ(load_germ(sample(f)));
    for (int k = 2; k <= v.d_of_f; ++k) {
      const auto* id = v.identity(k);
      if (!id->cls.nonempty() || id->expected_dim < 0) continue;
      const bool sing = id->cls.singular();
      EXPECT_EQ(sing, mu_alt_dk(v, k).value > 0) << f << " k=" << k;
      bool any = false, all = true;
      for (const auto* c : v.cells_of(k)) {
        if (!c->cls.nonempty() || c->expected_dim < 0) continue;
        any = any || c->cls.singular();
        all = all && c->cls.singular();
      }
      EXPECT_EQ(sing, any) << f << " k=" << k;
      EXPECT_EQ(sing, all) << f << " k=" << k;
      for (const auto& c : v.cells)
        if (c.sigma.is_identity() && c.k > k && c.cls.nonempty() && c.expected_dim >= 0)
          EXPECT_EQ(sing, c.cls.singular()) << f << " k=" << k << " vs " << c.k;
      for (const auto* c : v.cells_of(k))
        if (c->expected_dim < 0 && c->cls.nonempty()) EXPECT_TRUE(sing) << f << " k=" << k;
    }
  }
}

TEST(Conservation, KillingExample) {
  std::ifstream in(fixture("killing.img"));
  auto f = parse_image_family(in);
  auto v = check_mu_conservation(f.n, f.p, f.data);
  EXPECT_FALSE(v.integer_ratio);
  EXPECT_TRUE(v.mu.holds);
  EXPECT_FALSE(v.mu.semicontinuous);
}

TEST(Conservation, MissingDeltaRefused) {
  std::ifstream in(fixture("killing_no_delta.img"));
  auto f = parse_image_family(in);
  EXPECT_THROW(check_mu_conservation(f.n, f.p, f.data), DomainError);
}

TEST(Conservation, TrivialPerturbation) {
  MuConservationData d;
  d.mu_I = 3;
  d.nu_I = 3;
  d.local_mu_I = {3};
  d.local_nu_I = {3};
  auto v = check_mu_conservation(2, 3, d);
  EXPECT_TRUE(v.integer_ratio);
  EXPECT_TRUE(v.holds());
}

TEST(Conservation, ViolationReportsResidual) {
  MuConservationData d;
  d.mu_I = 3;
  d.betti = {{1, 1}};
  d.local_mu_I = {1};
  auto v = check_mu_conservation(2, 3, d);
  EXPECT_FALSE(v.mu.holds);
  EXPECT_EQ(v.mu.difference, 1);
  EXPECT_THROW(check_mu_conservation(2, 5, d), DomainError);
}
