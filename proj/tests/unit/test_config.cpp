#include <gtest/gtest.h>

#include <cstdlib>

#include <census/config.hpp>
#include <census/families.hpp>

using namespace census;

// Run with CENSUS_NMAX=7.
TEST(Config, EnvironmentOverridesBounds) {
  const char* raw = std::getenv("CENSUS_NMAX");
  if (raw == nullptr) GTEST_SKIP() << "CENSUS_NMAX not set";
  EXPECT_EQ(binomial_memo_bound(), 7U);
  EXPECT_EQ(family_memo_bound(), 7U);
}

TEST(Config, ValuesBeyondTheBoundAreStillExact) {
  // n = 9 lies past the cache; the recurrence is evaluated without memoization.
  auto t9 = univariate_coefficients(strong_tournament_poly(9), Var::u);
  BigInt total = 0;
  for (const auto& c : t9) total += c;
  EXPECT_EQ(total, BigInt("64026088576"));
  EXPECT_EQ(strong_tournament_poly(9), strong_tournament_poly_series(9));
}

TEST(Config, Defaults) {
  EXPECT_EQ(kDefaultBinomialMemoBound, 12U);
  EXPECT_EQ(kDefaultFamilyMemoBound, 10U);
}
