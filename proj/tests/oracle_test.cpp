#include <gtest/gtest.h>

#include "balanced/oracle.hpp"
#include "test_support.hpp"

namespace balanced {
namespace {

Configuration C(const char* text) { return Configuration(Word::parse(text)); }

TEST(BruteForce, VolleyballInstanceIsImpossible) {
  const OracleResult r = brute_force_exists(AdmissibilityQuery(10, 3, 6, 2));
  EXPECT_FALSE(r.exists);
  EXPECT_FALSE(r.witness.has_value());
  EXPECT_EQ(r.instances_checked, 120u);
}

TEST(BruteForce, SevenThreeFiveTwo) {
  const OracleResult r = brute_force_exists(AdmissibilityQuery(7, 3, 5, 2));
  ASSERT_TRUE(r.exists);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(rotation_equivalent(r.witness->spots(), Word::parse("ABABABB")));
  EXPECT_TRUE(is_admissible(*r.witness, 5, 2).admissible);
  EXPECT_LE(r.instances_checked, 35u);
}

TEST(BruteForce, FourTwoTwoTwo) {
  const OracleResult r = brute_force_exists(AdmissibilityQuery(4, 2, 2, 2));
  EXPECT_FALSE(r.exists);
  EXPECT_EQ(r.instances_checked, 6u);
}

TEST(BruteForce, FirstWitnessIsLexicographicallyFirst) {
  // t = 0 accepts the very first candidate, the word with every A up front.
  const OracleResult r = brute_force_exists(AdmissibilityQuery(6, 2, 3, 0));
  ASSERT_TRUE(r.exists);
  EXPECT_EQ(r.witness->spots(), Word::parse("AABBBB"));
  EXPECT_EQ(r.instances_checked, 1u);
}

TEST(BruteForce, Cap) {
  EXPECT_THROW(brute_force_exists(AdmissibilityQuery(21, 3, 6, 2)), std::invalid_argument);
  EXPECT_NO_THROW(brute_force_exists(AdmissibilityQuery(21, 20, 1, 1), OracleOptions{21, false}));
}

TEST(BruteForce, RotationReductionAgrees) {
  for (std::uint64_t n = 2; n <= 10; ++n)
    for (std::uint64_t k = 1; k < n; ++k)
      for (std::uint64_t s = 1; s < n; ++s)
        for (std::uint64_t t = 0; t <= std::min(k, s); ++t) {
          const AdmissibilityQuery q(n, k, s, t);
          const OracleResult full = brute_force_exists(q);
          const OracleResult reduced = brute_force_exists(q, OracleOptions{20, true});
          ASSERT_EQ(full.exists, reduced.exists);
          ASSERT_LE(reduced.instances_checked, full.instances_checked);
          if (reduced.witness) {
            ASSERT_TRUE(is_admissible(*reduced.witness, s, t).admissible);
          }
        }
}

TEST(BruteForce, AgreesWithCriterionAndWitnessesAreValid) {
  for (std::uint64_t n = 2; n <= 9; ++n)
    for (std::uint64_t k = 1; k < n; ++k)
      for (std::uint64_t s = 1; s < n; ++s)
        for (std::uint64_t t = 0; t <= std::min(k, s); ++t) {
          const AdmissibilityQuery q(n, k, s, t);
          const OracleResult r = brute_force_exists(q);
          ASSERT_EQ(r.exists, criterion(q)) << n << " " << k << " " << s << " " << t;
          if (r.exists) {
            ASSERT_TRUE(is_admissible(*r.witness, s, t).admissible);
          } else {
            // Every weight-k word was examined.
            std::uint64_t binom = 1;
            for (std::uint64_t i = 0; i < k; ++i) binom = binom * (n - i) / (i + 1);
            ASSERT_EQ(r.instances_checked, binom);
          }
        }
}

TEST(Pigeonhole, Examples) {
  EXPECT_EQ(pigeonhole_witness(C("AAABBBBBBB"), 6), (WindowReport{3, 6, 0}));
  EXPECT_EQ(pigeonhole_witness(C("ABABAB"), 2).weight, 1u);
  const Configuration mech(mechanical_word(Slope(3, 10)));
  EXPECT_EQ(mech.spots(), Word::parse("ABBABBABBB"));
  EXPECT_EQ(pigeonhole_witness(mech, 6).weight, 1u);
  EXPECT_THROW(pigeonhole_witness(C("AB"), 2), std::out_of_range);
}

TEST(Pigeonhole, BoundHoldsForEveryConfiguration) {
  for (std::size_t n = 2; n <= 12; ++n)
    for (const auto& w : testing::all_words(n)) {
      const Configuration c(w);
      for (std::size_t s = 1; s < n; ++s) {
        const WindowReport r = pigeonhole_witness(c, s);
        ASSERT_LE(r.weight, c.k() * s / n);
        // With n t > k s the lightest window already breaks admissibility.
        const std::uint64_t t = c.k() * s / n + 1;
        ASSERT_LT(r.weight, t);
        ASSERT_FALSE(is_admissible(c, s, t).admissible);
      }
    }
}

}  // namespace
}  // namespace balanced
