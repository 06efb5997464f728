#include <doctest.h>

#include "properties.hpp"
#include "test_support.hpp"

using namespace lsym::testing;

// Randomized properties; the engine is seeded from --seed.

namespace {

constexpr int kCases = 60;

void expect_pass(const PropertyResult& r) {
  CHECK(r.cases == kCases);
  for (const auto& f : r.failures) FAIL_CHECK(r.name << ": " << f);
}

}  // namespace

TEST_CASE("constructed hom and tensor bimodules satisfy the bimodule identities") {
  expect_pass(prop_constructed_bimodules(seed(), kCases));
}

TEST_CASE("associated brackets satisfy epsilon-skew symmetry and epsilon-Jacobi") {
  expect_pass(prop_associated_lie(seed(), kCases));
}

TEST_CASE("wedge normalization is idempotent and sign-consistent") {
  expect_pass(prop_wedge_normalization(seed(), kCases));
}

TEST_CASE("cochain evaluation is epsilon-alternating in the wedge slots") {
  expect_pass(prop_alternating_evaluation(seed(), kCases));
}
