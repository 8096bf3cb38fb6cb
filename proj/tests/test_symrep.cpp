#include <gtest/gtest.h>

#include <sstream>

#include "mpgerm/multipoint.hpp"
#include "mpgerm/symrep.hpp"
#include "oracles.hpp"

using namespace mpgerm;

using mpgerm::oracle::oracle_table;

TEST(Partition, EnumerationCounts) {
  const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (int k = 1; k <= 12; ++k) EXPECT_EQ(partitions(k).size(), static_cast<std::size_t>(p[k])) << k;
  auto four = partitions(4);
  EXPECT_EQ(four.front().label(), "(4)");
  EXPECT_EQ(four.back().label(), "(1,1,1,1)");
  EXPECT_THROW(partitions(13), DomainError);
}

TEST(Partition, ParseAndAlpha) {
  auto p = parse_partition("(3,1,1)");
  EXPECT_EQ(p.size(), 5);
  EXPECT_EQ(p.cycles(), 3);
  EXPECT_EQ(p.alpha(), (std::vector<int>{0, 2, 0, 1, 0, 0}));
  EXPECT_EQ(parse_partition("3,1,1").label(), "(3,1,1)");
  EXPECT_THROW(parse_partition("1,3,1"), DomainError);
  EXPECT_THROW(parse_partition("(2,x)"), ParseError);
}

TEST(Partition, ClassSizesSumToOrder) {
  for (int k = 1; k <= 10; ++k) {
    long s = 0;
    for (const auto& l : partitions(k)) s += class_size(l);
    EXPECT_EQ(s, factorial(k));
  }
}

TEST(CharacterTable, MatchesBruteForceOracle) {
  for (int k = 1; k <= 5; ++k) {
    auto t = character_table_symmetric(k);
    auto oracle = oracle_table(k);
    ASSERT_EQ(oracle.size(), t.irreducibles().size());
    for (std::size_t i = 0; i < oracle.size(); ++i)
      EXPECT_EQ(oracle[i], t.irreducibles()[i].values) << "k=" << k << " " << t.irreducibles()[i].label;
  }
}

TEST(CharacterTable, OrthogonalityUpToEight) {
  for (int k = 1; k <= 8; ++k) {
    auto t = character_table_symmetric(k);
    const auto& cls = t.classes();
    const auto& ir = t.irreducibles();
    long deg2 = 0;
    for (const auto& r : ir) deg2 += r.degree * r.degree;
    EXPECT_EQ(deg2, factorial(k));
    for (std::size_t a = 0; a < ir.size(); ++a)
      for (std::size_t b = 0; b < ir.size(); ++b) {
        Rational s = 0;
        for (std::size_t c = 0; c < cls.size(); ++c) s += cls[c].size * ir[a].values[c] * ir[b].values[c];
        EXPECT_EQ(s, a == b ? Rational(factorial(k)) : Rational(0));
      }
    for (std::size_t c = 0; c < cls.size(); ++c)
      for (std::size_t d = 0; d < cls.size(); ++d) {
        Rational s = 0;
        for (const auto& r : ir) s += r.values[c] * r.values[d];
        EXPECT_EQ(s, c == d ? Rational(factorial(k) / cls[c].size) : Rational(0));
      }
  }
}

TEST(CharacterTable, TrivialAndAlt) {
  auto t = character_table_symmetric(4);
  EXPECT_EQ(t.irreducibles()[t.trivial_index()].label, "(4)");
  auto alt = t.irrep_index("Alt");
  for (std::size_t c = 0; c < t.class_count(); ++c)
    EXPECT_EQ(t.irreducibles()[alt].values[c], sign_of_class(parse_partition(t.classes()[c].label)));
}

TEST(CharacterTable, S3Values) {
  auto t = character_table_symmetric(3);
  ASSERT_EQ(t.class_count(), 3u);
  EXPECT_EQ(t.classes()[0].label, "(1,1,1)");
  EXPECT_EQ(t.classes()[1].label, "(2,1)");
  EXPECT_EQ(t.classes()[2].label, "(3)");
  auto std_rep = t.irreducibles()[t.irrep_index("(2,1)")].values;
  EXPECT_EQ(std_rep, (std::vector<Rational>{2, 0, -1}));
}

TEST(CharacterTable, FileRoundTrip) {
  for (int k = 1; k <= 6; ++k) {
    auto t = character_table_symmetric(k);
    std::istringstream in(format_character_table(t));
    auto u = parse_character_table(in);
    EXPECT_EQ(u.name(), t.name());
    EXPECT_EQ(u.group_order(), t.group_order());
    ASSERT_EQ(u.class_count(), t.class_count());
    for (std::size_t i = 0; i < t.irreducibles().size(); ++i)
      EXPECT_EQ(u.irreducibles()[i].values, t.irreducibles()[i].values);
    EXPECT_EQ(u.alt_index(), t.alt_index());
  }
}

TEST(CharacterTable, RejectsBadTables) {
  std::istringstream bad_sizes("group G 2\nclasses e:1 s:2\nirrep a 1 1\nirrep b 1 -1\n");
  EXPECT_THROW(parse_character_table(bad_sizes), InconsistentData);
  std::istringstream not_orth("group G 2\nclasses e:1 s:1\nirrep a 1 1\nirrep b 1 1\n");
  EXPECT_THROW(parse_character_table(not_orth), InconsistentData);
  std::istringstream junk("group G 2\nwhat\n");
  EXPECT_THROW(parse_character_table(junk), ParseError);
}

TEST(Parity, SignMatchesDimensionDrop) {
  for (int n = 1; n <= 10; ++n)
    for (int p = n + 1; p <= 2 * n; ++p)
      for (int k = 1; k <= 8; ++k)
        for (const auto& l : partitions(k)) {
          int e = expected_dim(n, p, k) - expected_dim_sigma(n, p, k, l);
          EXPECT_EQ(e % 2 ? -1 : 1, sign_of_class(l));
        }
}
