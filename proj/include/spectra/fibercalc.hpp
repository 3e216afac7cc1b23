#pragma once

#include <string>
#include <vector>

namespace spectra {

/// h0 of (line bundle of fiber degree `deg`) ⊗ I_n on a smooth elliptic
/// fiber; `trivial` matters only in degree 0.
int atiyah_h0(int n, int deg, bool trivial);

/// Ranks of the indecomposable summands of I_a ⊗ I_b.
std::vector<int> clebsch_gordan(int a, int b);

/// h0(End(I_a) ⊗ I_b) = sum over k = 1..a of min(2k-1, b).
int end_atiyah_twist_h0(int a, int b);

enum class FiberKind { distinct_line_bundles, atiyah, split_pair };
std::string to_string(FiberKind kind);

/// Restriction of V to a general fiber.
struct FiberBundleDesc {
  FiberKind kind = FiberKind::distinct_line_bundles;
  int r = 1;
  int l_deg = 1;  // split_pair only: fiber degree of l in l ⊕ l^{-1}

  static FiberBundleDesc distinct(int r) { return {FiberKind::distinct_line_bundles, r, 0}; }
  static FiberBundleDesc atiyah(int r) { return {FiberKind::atiyah, r, 0}; }
  static FiberBundleDesc split_pair(int l_deg) { return {FiberKind::split_pair, 2, l_deg}; }
};

struct EndTwistRanks {
  int rank_vertical = 0;  // End V ⊗ (pullback of the base canonical bundle)
  int rank_full = 0;      // End V ⊗ cotangent bundle of the surface
  /// True when the input is one of the cells checked against a closed
  /// reference value; other cells extrapolate the same rules.
  bool reference_cell = false;
};

EndTwistRanks rank_pushforward_end_twists(const FiberBundleDesc& desc);

}  // namespace spectra
