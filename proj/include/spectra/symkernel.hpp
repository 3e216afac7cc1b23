#pragma once

#include <cstdint>
#include <vector>

#include "spectra/poly_matrix.hpp"

namespace spectra {

/// Presentation of Sym^r of the ideal (f, g): delta is (r+1) x r with -f on
/// the diagonal and g on the subdiagonal.
struct SymPresentation {
  int r = 2;
  Poly f;
  Poly g;
  PolyMatrix delta;
};

/// Throws HypothesisViolation unless gcd(f, g) = 1.
SymPresentation delta_matrix(const Poly& f, const Poly& g, int r);

/// (g^r, f g^{r-1}, ..., f^r).
PolyVector kernel_generator(const SymPresentation& p);

/// Kernel of delta^T by fraction-free elimination; throws Falsification when
/// it is not of rank one or not associate to the closed form.
PolyVector kernel_solver(const SymPresentation& p);

/// True when a and b differ by a nonzero rational factor.
bool associates(const PolyVector& a, const PolyVector& b);

struct WitnessSample {
  PolyVector psi;       // psi = sum psi[k] X^k Y^{r-1-k}
  PolyVector vector;    // coefficients of (gX - fY) psi in the basis X^i Y^{r-i}
  PolyVector preimage;  // y with delta y = vector
  bool annihilated = false;
  bool in_image = false;
};

struct TorsionFreeReport {
  std::vector<WitnessSample> samples;
  int passed = 0;
  /// Random vectors outside the kernel of omega that omega failed to detect.
  int converse_failures = 0;
  int converse_checked = 0;
  [[nodiscard]] bool all_passed() const { return passed == static_cast<int>(samples.size()) && converse_failures == 0; }
};

/// Vectors of the form (gX - fY) psi lie in ker(omega) and in image(delta).
/// Throws Falsification on any failed sample.
TorsionFreeReport torsion_free_witness(const SymPresentation& p, int samples, std::uint64_t seed);

/// Coefficient vector of (gX - fY) psi where psi = sum c_k X^k Y^{r-1-k}.
PolyVector expand_factorization(const SymPresentation& p, const PolyVector& psi_coeffs);

}  // namespace spectra
