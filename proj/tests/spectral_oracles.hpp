#pragma once

#include "spectra/poly.hpp"
#include "spectra/upoly.hpp"
#include "spectra/weierstrass.hpp"

namespace oracle {

/// Branch form of the double cover C -> B for r = 2 with coprime s0, s2:
/// C is birational to w^2 = s2 (-s0^3 - a4 s0 s2^2 + a6 s2^3).
inline spectra::Poly branch_form(const spectra::WeierstrassModel& m, const spectra::Poly& s0, const spectra::Poly& s2) {
  return s2 * (-(s0 * s0 * s0) - *m.a4 * s0 * s2 * s2 + *m.a6 * s2 * s2 * s2);
}

/// Squarefree as a binary form: no repeated root on P^1, including [1:0].
inline bool binary_form_squarefree(const spectra::Poly& h, int degree) {
  using namespace spectra;
  const UPoly affine = h.specialize({{Var::v, Rat(1)}}).shrink_vars().to_upoly(Var::u);
  if (degree - affine.degree() >= 2) return false;
  if (affine.degree() <= 0) return true;
  return gcd(affine, affine.derivative()).degree() == 0;
}

}  // namespace oracle
