#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/rational.hpp"
#include "spectra/upoly.hpp"

namespace spectra {

/// Fixed variable alphabet. Base coordinates u, v; auxiliary t; fiber x, y.
enum class Var : int { u = 0, v = 1, t = 2, x = 3, y = 4 };
inline constexpr int kNumVars = 5;
inline constexpr std::array<Var, kNumVars> kAllVars{Var::u, Var::v, Var::t, Var::x, Var::y};

char var_name(Var var);
std::optional<Var> var_from_name(std::string_view name);

using Exps = std::array<int, kNumVars>;

/// Orders exponent vectors by total degree, then lexicographically with
/// u > v > t > x > y. Larger monomials sort first.
struct DegLexGreater {
  bool operator()(const Exps& a, const Exps& b) const;
};

/// Bitmask of declared variables.
class VarSet {
 public:
  constexpr VarSet() = default;
  VarSet(std::initializer_list<Var> vars);
  [[nodiscard]] bool contains(Var var) const { return (bits_ >> static_cast<int>(var)) & 1U; }
  VarSet& insert(Var var);
  VarSet& erase(Var var);
  [[nodiscard]] VarSet united(VarSet other) const;
  [[nodiscard]] std::vector<Var> list() const;
  [[nodiscard]] bool empty() const { return bits_ == 0; }
  friend bool operator==(VarSet a, VarSet b) { return a.bits_ == b.bits_; }

 private:
  std::uint8_t bits_ = 0;
};

/// Sparse multivariate polynomial over Q. Terms never store zero
/// coefficients; iteration runs from the deg-lex leading term downwards.
class Poly {
 public:
  using TermMap = std::map<Exps, Rat, DegLexGreater>;

  Poly() = default;
  Poly(long constant);  // NOLINT(google-explicit-constructor)
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)

  static Poly variable(Var var);
  static Poly monomial(const Exps& exps, const Rat& coeff);
  static Poly from_upoly(const UPoly& p, Var var);
  /// Parses expressions like "4*u^12 + 27 v^12", "(x-y)^2/3".
  static Poly parse(std::string_view text);

  [[nodiscard]] const TermMap& terms() const { return terms_; }
  [[nodiscard]] VarSet vars() const { return vars_; }
  /// Declares extra variables without changing the value.
  [[nodiscard]] Poly with_vars(VarSet extra) const;
  /// Same value with the declared set cut down to the support.
  [[nodiscard]] Poly shrink_vars() const;
  /// Variables that occur with positive exponent.
  [[nodiscard]] VarSet support() const;

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] Rat constant_value() const;
  [[nodiscard]] bool involves(Var var) const;
  [[nodiscard]] int degree_in(Var var) const;
  [[nodiscard]] int total_degree() const;
  /// True when every term has total degree `deg` in the variables of `in`.
  [[nodiscard]] bool is_homogeneous(VarSet in, int deg) const;
  [[nodiscard]] Rat coeff(const Exps& exps) const;
  /// Deg-lex leading coefficient; throws on zero.
  [[nodiscard]] const Rat& leading_coeff() const;
  [[nodiscard]] const Exps& leading_exps() const;

  [[nodiscard]] Poly derivative(Var var) const;
  [[nodiscard]] Poly pow(int exponent) const;
  [[nodiscard]] Poly substitute(Var var, const Poly& value) const;
  /// Substitutes constants for some variables and drops them from the
  /// declared set.
  [[nodiscard]] Poly specialize(const std::map<Var, Rat>& assignment) const;
  /// Full evaluation; every declared variable must be assigned.
  [[nodiscard]] Rat eval(const std::map<Var, Rat>& assignment) const;

  /// c[k] is the coefficient of var^k.
  [[nodiscard]] std::vector<Poly> coefficients_in(Var var) const;
  static Poly from_coefficients(const std::vector<Poly>& coeffs, Var var);
  /// Requires support within {var}.
  [[nodiscard]] UPoly to_upoly(Var var) const;

  [[nodiscard]] Poly monic() const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  /// Value equality; declared variable sets are ignored.
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const;

 private:
  void add_term(const Exps& exps, const Rat& coeff);
  TermMap terms_;
  VarSet vars_;
};

/// Exact quotient, or nullopt when `divisor` does not divide `p`.
std::optional<Poly> divide_exact(const Poly& p, const Poly& divisor);
/// Pseudo-remainder of p by q with respect to var.
Poly prem(const Poly& p, const Poly& q, Var var);
/// Gcd of the coefficients of p viewed in var (monic normalized).
Poly content_in(const Poly& p, Var var);
Poly primitive_part_in(const Poly& p, Var var);

/// Monic-normalized gcd; throws DomainError when both inputs are zero.
Poly gcd(const Poly& p, const Poly& q);
/// Product of the distinct irreducible factors, monic-normalized.
Poly squarefree_part(const Poly& p);
/// Sylvester determinant in var; throws DomainError when var occurs in
/// neither input.
Poly resultant(const Poly& p, const Poly& q, Var var);
/// Resultant in x of polynomials supported in {t, x}, computed by evaluation
/// at integer t and interpolation. Agrees with resultant(p, q, x).
UPoly resultant_dense(const Poly& p, const Poly& q, Var x, Var t);

}  // namespace spectra
