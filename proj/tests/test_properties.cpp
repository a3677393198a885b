#include <gtest/gtest.h>

#include "sl2cp/verify/properties.hpp"

namespace sl2cp::verify {
namespace {

void expect_all_pass(const std::vector<PropertyResult>& results) {
  ASSERT_FALSE(results.empty());
  for (const auto& r : results) {
    EXPECT_GT(r.cases, 0u) << r.name;
    EXPECT_TRUE(r.passed()) << r.module << "/" << r.name << ": " << r.failures << " of "
                            << r.cases << " failed, " << r.first_failure;
  }
}

TEST(Properties, Weights) { expect_all_pass(weights_properties(0)); }
TEST(Properties, Polynomial) { expect_all_pass(polynomial_properties(0)); }
TEST(Properties, RepMatrix) { expect_all_pass(repmatrix_properties(0)); }
TEST(Properties, Charpoly) { expect_all_pass(charpoly_properties(0)); }
TEST(Properties, Monoid) { expect_all_pass(monoid_properties(0)); }
TEST(Properties, Sln) { expect_all_pass(sln_properties(0)); }

TEST(Properties, OtherSeed) {
  expect_all_pass(weights_properties(2024));
  expect_all_pass(polynomial_properties(2024));
  expect_all_pass(monoid_properties(2024));
}

TEST(Properties, FailuresAreReported) {
  const auto r = check_property("meta", "always fails", 3, 0,
                                [](Gen&, std::size_t k) -> Failure {
                                  if (k == 1) throw std::runtime_error("boom");
                                  return "nope";
                                });
  EXPECT_EQ(r.failures, 3u);
  EXPECT_EQ(r.first_failure, "case 0: nope");
}

}  // namespace
}  // namespace sl2cp::verify
