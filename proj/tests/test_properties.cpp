#include "doctest.h"

#include <random>

#include "testkit.hpp"

namespace {
void report(const testkit::Failures& bad) {
  for (std::size_t i = 0; i < std::min<std::size_t>(bad.size(), 5); ++i) MESSAGE(bad[i]);
  CHECK(bad.empty());
}
}  // namespace

TEST_CASE("property: implication chain over the bundled catalogs") {
  report(testkit::prop_implication_chain(testkit::bundled_pairs()));
}

TEST_CASE("property: filters and scans agree") {
  report(testkit::prop_filter_scan_agreement(testkit::bundled_pairs()));
}

TEST_CASE("property: verdicts are invariant under conjugation and change of basis") {
  std::mt19937_64 rng(31);
  report(testkit::prop_invariance(testkit::bundled_pairs(), rng, 20));
}
