#include <doctest.h>

#include <vector>

#include "spectra/errors.hpp"
#include "spectra/fibercalc.hpp"
#include "spectra/rational.hpp"

#include "fiber_oracles.hpp"

using namespace spectra;

using oracle::invariants_end_twist;

TEST_CASE("atiyah_h0 examples") {
  CHECK(atiyah_h0(2, 2, false) == 4);
  CHECK(atiyah_h0(2, 0, true) == 1);
  CHECK(atiyah_h0(2, 0, false) == 0);
  CHECK(atiyah_h0(3, -1, false) == 0);
  CHECK_THROWS_AS(atiyah_h0(0, 1, false), DomainError);
  // (O(2p) + O^2 + O(-2p)) tensor I_2 splits as 4 + 2 + 0.
  CHECK(atiyah_h0(2, 2, false) + 2 * atiyah_h0(2, 0, true) + atiyah_h0(2, -2, false) == 6);
}

TEST_CASE("rank_pushforward_end_twists examples") {
  const EndTwistRanks d3 = rank_pushforward_end_twists(FiberBundleDesc::distinct(3));
  CHECK(d3.rank_vertical == 3);
  CHECK(d3.rank_full == 3);
  const EndTwistRanks sp = rank_pushforward_end_twists(FiberBundleDesc::split_pair(1));
  CHECK(sp.rank_vertical == 4);
  CHECK(sp.rank_full == 6);
  CHECK(sp.reference_cell);
  const EndTwistRanks a4 = rank_pushforward_end_twists(FiberBundleDesc::atiyah(4));
  CHECK(a4.rank_vertical == 4);
  CHECK(a4.rank_full == 7);
  CHECK(rank_pushforward_end_twists(FiberBundleDesc::atiyah(2)).rank_full == 3);
  CHECK_FALSE(rank_pushforward_end_twists(FiberBundleDesc::split_pair(2)).reference_cell);
}

TEST_CASE("property: Atiyah End twists match monodromy invariants") {
  for (int a = 1; a <= 10; ++a) {
    for (int b = 1; b <= 2; ++b) {
      CHECK(end_atiyah_twist_h0(a, b) == invariants_end_twist(a, b));
    }
  }
}

TEST_CASE("property: rank gaps") {
  for (int r = 1; r <= 10; ++r) {
    const EndTwistRanks d = rank_pushforward_end_twists(FiberBundleDesc::distinct(r));
    CHECK(d.rank_vertical == d.rank_full);
    CHECK(d.rank_vertical == r);
    const EndTwistRanks a = rank_pushforward_end_twists(FiberBundleDesc::atiyah(r));
    CHECK(a.rank_vertical == r);
    CHECK(a.rank_full - a.rank_vertical == r - 1);
    CHECK(a.rank_vertical <= a.rank_full);
  }
  for (int l = 1; l <= 5; ++l) {
    const EndTwistRanks s = rank_pushforward_end_twists(FiberBundleDesc::split_pair(l));
    CHECK(s.rank_vertical == 2 + 2 * l);
    CHECK(s.rank_full == 2 + 4 * l);
    CHECK(s.rank_vertical < s.rank_full);
  }
}

TEST_CASE("Clebsch-Gordan ranks add up") {
  for (int a = 1; a <= 6; ++a) {
    for (int b = 1; b <= 6; ++b) {
      int sum = 0;
      for (int k : clebsch_gordan(a, b)) sum += k;
      CHECK(sum == a * b);
    }
  }
}
