#pragma once

#include <optional>
#include <vector>

#include "spectra/poly.hpp"

namespace spectra {

using PolyVector = std::vector<Poly>;
using PolyMatrix = std::vector<PolyVector>;

/// Fraction-free (Bareiss) determinant of a square matrix.
Poly determinant(const PolyMatrix& m);

/// Basis of the kernel of m over the fraction field, each vector cleared of
/// denominators and content and normalized so its first nonzero entry is
/// monic.
std::vector<PolyVector> nullspace(const PolyMatrix& m, int columns);

enum class SolveStatus { ok, inconsistent, non_polynomial };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  /// Polynomial solution with free unknowns set to zero (status ok only).
  PolyVector solution;
  int rank = 0;
  bool unique = false;
};

/// Solves m * y = rhs for y with polynomial entries.
SolveResult solve_polynomial(const PolyMatrix& m, const PolyVector& rhs);

PolyVector mat_vec(const PolyMatrix& m, const PolyVector& y);
Poly dot(const PolyVector& a, const PolyVector& b);
PolyMatrix transpose(const PolyMatrix& m, int columns);

}  // namespace spectra
