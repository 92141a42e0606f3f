#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "pwl/cycles.hpp"
#include "pwl/rng.hpp"

using namespace pwl;

namespace {
const ModelParams kP{0.8, 2.5, 0.05};

bool contains_outer(const std::string& seq) {
  return seq.find_first_not_of('M') != std::string::npos;
}

const CycleScanEntry* find_seq(const std::vector<CycleScanEntry>& entries,
                               const std::string& seq) {
  const auto it = std::find_if(entries.begin(), entries.end(),
                               [&](const auto& e) { return e.sequence == seq; });
  return it == entries.end() ? nullptr : &*it;
}
}  // namespace

TEST_CASE("the middle itinerary carries the unit eigenvalue and is the segment") {
  const auto entries = cycle_scan(kP, 3);
  const auto* m = find_seq(entries, "M");
  REQUIRE(m != nullptr);
  CHECK(m->unit_eigenvalue);
  CHECK(m->admissible);

  // powers of the middle matrix keep the unit eigenvalue; they are the same
  // segment of fixed points, not genuine longer cycles
  for (const char* seq : {"MM", "MMM"}) {
    const auto* e = find_seq(entries, seq);
    REQUIRE(e != nullptr);
    CHECK(e->unit_eigenvalue);
    CHECK(e->admissible);
  }
}

TEST_CASE("sequences are enumerated up to cyclic shifts") {
  const auto entries = cycle_scan(kP, 3);
  long k1 = 0, k2 = 0, k3 = 0;
  for (const auto& e : entries) {
    if (e.k == 1) ++k1;
    if (e.k == 2) ++k2;
    if (e.k == 3) ++k3;
  }
  CHECK(k1 == 3);   // L, M, R
  CHECK(k2 == 6);   // necklaces of length 2 over 3 symbols
  CHECK(k3 == 11);  // necklaces of length 3
  CHECK(find_seq(entries, "ML") == nullptr);  // only canonical rotations ("LM")
  CHECK(find_seq(entries, "LM") != nullptr);
}

TEST_CASE("no admissible cycle leaves the middle partition at b=0.8, c=2.5") {
  const auto entries = cycle_scan(kP, 6);
  for (const auto& e : entries) {
    if (contains_outer(e.sequence)) {
      CHECK_FALSE(e.unit_eigenvalue);
      CHECK_FALSE(e.admissible);
    } else {
      CHECK(e.unit_eigenvalue);
      CHECK(e.admissible);
    }
  }
}

TEST_CASE("random moderate-impact parameter points show the same generic picture") {
  SplitMix64 rng(211);
  for (int trial = 0; trial < 5; ++trial) {
    const double b = rng.uniform(0.1, 0.9);
    const double c = rng.uniform(2.0 * (1.0 - b) + 0.05, 2.0 * (1.0 + b) - 0.05);
    const auto entries = cycle_scan({b, c, 0.05}, 6);
    for (const auto& e : entries)
      if (contains_outer(e.sequence)) CHECK_FALSE(e.admissible);
  }
}

TEST_CASE("eigenvalues of composed Jacobians keep the determinant b^k") {
  const auto entries = cycle_scan(kP, 5);
  for (const auto& e : entries) {
    const double detk = std::pow(kP.b, e.k);
    const double prod = e.eig.complex_pair
                            ? e.eig.re1 * e.eig.re1 + e.eig.im1 * e.eig.im1
                            : e.eig.re1 * e.eig.re2;
    CHECK(prod == doctest::Approx(detk).epsilon(1e-9));
  }
}

TEST_CASE("k_max is validated") {
  CHECK_THROWS_AS(cycle_scan(kP, 0), std::invalid_argument);
}
