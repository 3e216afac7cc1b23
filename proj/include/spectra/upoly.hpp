#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spectra/rational.hpp"

namespace spectra {

/// Dense univariate polynomial over Q, coefficients stored lowest degree
/// first. The workhorse for specialized fibers and eliminants.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(long constant);  // NOLINT(google-explicit-constructor)
  UPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)

  static UPoly monomial(int degree, const Rat& coeff);
  static UPoly identity() { return monomial(1, 1); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rat>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rat coeff(int i) const;
  [[nodiscard]] const Rat& leading() const;

  [[nodiscard]] Rat operator()(const Rat& at) const;
  [[nodiscard]] UPoly derivative() const;
  [[nodiscard]] UPoly monic() const;
  /// Scales to integer coefficients with unit content and positive leading
  /// coefficient.
  [[nodiscard]] UPoly primitive_integer() const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  UPoly& operator*=(const Rat& scalar);

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend UPoly operator*(UPoly a, const Rat& s) { return a *= s; }
  friend UPoly operator-(UPoly a) { return a *= Rat(-1); }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws DomainError on division by zero.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

UPoly operator%(const UPoly& a, const UPoly& b);
UPoly operator/(const UPoly& a, const UPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);

struct UXgcd {
  UPoly g;  // monic
  UPoly s;
  UPoly t;  // s*a + t*b == g
};
UXgcd xgcd(const UPoly& a, const UPoly& b);

UPoly squarefree_part(const UPoly& p);

/// Yun's algorithm: p = lc * prod f_k^k with the f_k monic, squarefree and
/// pairwise coprime. Entries with constant f_k are omitted.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// All rational roots (without multiplicity, ascending). Returns nullopt when
/// the rational-root candidates cannot be enumerated because the extreme
/// coefficients exceed `bound` in absolute value.
std::optional<std::vector<Rat>> rational_roots(const UPoly& p, const Int& bound = Int("1000000000000"));

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
UPoly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace spectra
