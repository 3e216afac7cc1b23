#pragma once

#include <optional>
#include <random>
#include <vector>

#include "spectra/poly.hpp"
#include "spectra/upoly.hpp"

namespace spectra {

/// Polynomial in x with coefficients in Q[t], lowest x-degree first.
using TXPoly = std::vector<UPoly>;

TXPoly to_txpoly(const Poly& p, Var t, Var x);

/// One branch of a dynamic-evaluation computation: on every root of
/// `modulus` (squarefree), the input polynomials have gcd `gcd` in x.
struct ComponentGcd {
  UPoly modulus;
  TXPoly gcd;  // monic in x, coefficients reduced mod modulus; empty = zero
};

/// Gcd in x of `polys` over Q[t]/(modulus), splitting the modulus whenever a
/// leading coefficient is a zero divisor.
std::vector<ComponentGcd> d5_gcd(const UPoly& modulus, const std::vector<TXPoly>& polys);

/// Common zeros in Q̄^2 of polynomials supported in {t, x}.
struct CommonZeros {
  /// Nonconstant gcd of the inputs: the zero set contains a curve.
  std::optional<Poly> curve;
  /// Rational t0 with a nonconstant gcd in x over that fiber.
  std::vector<std::pair<Rat, UPoly>> rational_fibers;
  /// Components over irrational t0 with a common root.
  std::vector<ComponentGcd> algebraic;
  /// Rational-root extraction was skipped (coefficients too large).
  bool rational_search_skipped = false;
  [[nodiscard]] bool empty() const { return !curve && rational_fibers.empty() && algebraic.empty(); }
};

CommonZeros common_zeros(const std::vector<Poly>& polys, Var t, Var x, std::mt19937_64& rng);

/// Common zeros restricted to the single fiber t = t0.
UPoly fiber_gcd(const std::vector<Poly>& polys, Var t, Var x, const Rat& t0);

}  // namespace spectra
