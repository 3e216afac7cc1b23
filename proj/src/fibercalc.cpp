#include "spectra/fibercalc.hpp"

#include <algorithm>

#include "spectra/errors.hpp"

namespace spectra {

int atiyah_h0(int n, int deg, bool trivial) {
  if (n < 1) throw DomainError("Atiyah bundle rank must be at least 1");
  if (deg > 0) return n * deg;
  if (deg < 0) return 0;
  return trivial ? 1 : 0;
}

std::vector<int> clebsch_gordan(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("Atiyah bundle rank must be at least 1");
  std::vector<int> out;
  for (int k = 1; k <= std::min(a, b); ++k) out.push_back(a + b + 1 - 2 * k);
  return out;
}

int end_atiyah_twist_h0(int a, int b) {
  // End(I_a) = I_a ⊗ I_a = ⊕_{k} I_{2k-1}; each indecomposable summand of
  // I_{2k-1} ⊗ I_b has a one-dimensional space of sections.
  int total = 0;
  for (int k = 1; k <= a; ++k) {
    for (int rank : clebsch_gordan(2 * k - 1, b)) total += atiyah_h0(rank, 0, true);
  }
  return total;
}

std::string to_string(FiberKind kind) {
  switch (kind) {
    case FiberKind::distinct_line_bundles: return "distinct_line_bundles";
    case FiberKind::atiyah: return "atiyah";
    case FiberKind::split_pair: return "split_pair";
  }
  return "distinct_line_bundles";
}

EndTwistRanks rank_pushforward_end_twists(const FiberBundleDesc& desc) {
  EndTwistRanks out;
  switch (desc.kind) {
    case FiberKind::distinct_line_bundles:
      if (desc.r < 1) throw DomainError("rank must be at least 1");
      // λ_i ⊗ λ_j^{-1} has degree 0 and is trivial only for i = j.
      for (int i = 0; i < desc.r; ++i) {
        for (int j = 0; j < desc.r; ++j) {
          out.rank_vertical += atiyah_h0(1, 0, i == j);
          out.rank_full += atiyah_h0(2, 0, i == j);
        }
      }
      out.reference_cell = true;
      break;
    case FiberKind::split_pair: {
      if (desc.l_deg <= 0) throw DomainError("split pair needs a line bundle of positive fiber degree");
      // End(l ⊕ l^{-1}) = O^2 ⊕ l^2 ⊕ l^{-2}.
      const int degs[] = {0, 0, 2 * desc.l_deg, -2 * desc.l_deg};
      for (int deg : degs) {
        out.rank_vertical += atiyah_h0(1, deg, deg == 0);
        out.rank_full += atiyah_h0(2, deg, deg == 0);
      }
      out.reference_cell = desc.l_deg == 1;
      break;
    }
    case FiberKind::atiyah:
      if (desc.r < 1) throw DomainError("rank must be at least 1");
      out.rank_vertical = end_atiyah_twist_h0(desc.r, 1);
      out.rank_full = end_atiyah_twist_h0(desc.r, 2);
      out.reference_cell = true;
      break;
  }
  return out;
}

}  // namespace spectra
