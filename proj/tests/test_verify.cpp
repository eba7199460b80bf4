#include <gtest/gtest.h>

#include "maxclass/verify.hpp"

namespace mc = maxclass;

namespace {

void expect_all_pass(const std::vector<mc::PropertyResult>& results) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) EXPECT_TRUE(r.passed) << r.suite << ": " << r.name << " " << r.detail;
}

}  // namespace

TEST(Verify, SimplexSuite) { expect_all_pass(mc::run_verify_suite("simplex")); }

TEST(Verify, ZetaSuite) { expect_all_pass(mc::run_verify_suite("zeta")); }

TEST(Verify, PinnedScopes) {
  const mc::VerifyScope small{3, 5, 1};
  for (const char* suite : {"standardform", "stability", "shout", "counting", "oracle"}) {
    expect_all_pass(mc::run_verify_suite(suite, small));
  }
}

TEST(Verify, ShoutCoverageCountsTuples) {
  const auto results = mc::run_verify_suite("shout", {3, 5, 1});
  EXPECT_EQ(results.front().detail, "125 tuples, 25 up to twist");
}

TEST(Verify, OracleCoverage) {
  const auto results = mc::run_verify_suite("oracle", {2, 3, 2});
  EXPECT_EQ(results.front().detail, "81 tuples, 9 up to twist, dim <= 9");
}

TEST(Verify, ExceptionalScopeRejected) {
  EXPECT_THROW((void)mc::run_verify_suite("stability", {4, 3, 1}), mc::exceptional_prime_error);
}

TEST(Verify, UnknownSuite) { EXPECT_THROW((void)mc::run_verify_suite("nope"), std::invalid_argument); }
