#include <gtest/gtest.h>

#include <census/checks.hpp>

using namespace census;

namespace {

std::string first_failure(const CheckReport& r) {
  return r.failures.empty() ? std::string() : r.name + ": " + r.failures.front();
}

}  // namespace

TEST(Suites, OraclePasses) {
  for (const auto& r : oracle_suite({5, false, 2})) {
    EXPECT_TRUE(r.passed()) << first_failure(r);
    EXPECT_GT(r.cases, 0U) << r.name;
  }
}

TEST(Suites, IdentitiesPass) {
  for (const auto& r : identity_suite({})) {
    EXPECT_TRUE(r.passed()) << first_failure(r);
    EXPECT_GT(r.cases, 0U) << r.name;
  }
}

TEST(SeriesIdentities, AllOrders) {
  for (auto id : {SeriesIdentity::strong_log, SeriesIdentity::acyclic_inverse,
                  SeriesIdentity::tournament_u, SeriesIdentity::tree_revert,
                  SeriesIdentity::forest_exp}) {
    for (std::size_t order = 1; order <= 7; ++order) {
      auto r = series_identity_check(id, order);
      EXPECT_TRUE(r.passed()) << first_failure(r);
    }
  }
  EXPECT_TRUE(series_identity_check(SeriesIdentity::tree_revert, 8).passed());
  EXPECT_THROW(series_identity_check(SeriesIdentity::strong_log, 9), std::invalid_argument);
}

TEST(SeriesIdentities, Names) {
  EXPECT_EQ(series_identity_from_name("tournament-U"), SeriesIdentity::tournament_u);
  EXPECT_EQ(series_identity_name(SeriesIdentity::forest_exp), "forest-exp");
  EXPECT_THROW(series_identity_from_name("tournament-u"), std::invalid_argument);
}

TEST(SourceComponents, ConvolutionHolds) {
  auto r = source_component_convolution_check(4, {1, 2, 3});
  EXPECT_TRUE(r.passed()) << first_failure(r);
  EXPECT_EQ(r.cases, 12U);
}

TEST(CheckReport, RecordsFailures) {
  CheckReport r{"demo", {}, 0};
  r.expect(true, "unused");
  r.expect(false, "broken");
  EXPECT_EQ(r.cases, 2U);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures, std::vector<std::string>{"broken"});
}
