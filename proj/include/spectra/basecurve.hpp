#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/poly.hpp"

namespace spectra {

enum class TagKind { trivial, canonical_power, generic, explicit_form, unknown };

std::string to_string(TagKind kind);

/// A line bundle on the base curve B known by degree and a genericity tag.
struct LineBundleClass {
  int degree = 0;
  TagKind tag = TagKind::unknown;
  int k = 0;                   // canonical_power exponent
  std::optional<Poly> form;    // explicit_form: binary form in u, v

  static LineBundleClass trivial();
  static LineBundleClass canonical_power(int k, int g);
  static LineBundleClass generic(int degree);
  static LineBundleClass unknown(int degree);
  static LineBundleClass explicit_form(const Poly& form, int degree);

  /// Throws DomainError when tag and degree disagree for genus g.
  void validate(int g) const;
};

struct H0Policy {
  bool general_position = true;
};

struct H0Answer {
  int lower = 0;
  int upper = 0;
  bool exact = true;

  static H0Answer exactly(int n) { return {n, n, true}; }
  friend bool operator==(const H0Answer&, const H0Answer&) = default;
};

H0Answer h0(const LineBundleClass& line, int g, H0Policy policy = {});
/// h1(L) = h0(K_B - L), computed on the dual class.
H0Answer h1(const LineBundleClass& line, int g, H0Policy policy = {});

/// Class of K_B ⊗ L^{-1}.
LineBundleClass serre_dual(const LineBundleClass& line, int g);
LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b, int g);

/// u^n, u^{n-1}v, ..., v^n; empty for n < 0.
std::vector<Poly> section_basis_p1(int n);

}  // namespace spectra
