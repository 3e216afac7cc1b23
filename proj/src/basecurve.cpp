#include "spectra/basecurve.hpp"

#include <algorithm>

#include "spectra/errors.hpp"

namespace spectra {

std::string to_string(TagKind kind) {
  switch (kind) {
    case TagKind::trivial: return "trivial";
    case TagKind::canonical_power: return "canonical_power";
    case TagKind::generic: return "generic";
    case TagKind::explicit_form: return "explicit";
    case TagKind::unknown: return "unknown";
  }
  return "unknown";
}

LineBundleClass LineBundleClass::trivial() { return {0, TagKind::trivial, 0, std::nullopt}; }

LineBundleClass LineBundleClass::canonical_power(int k, int g) {
  return {k * (2 * g - 2), TagKind::canonical_power, k, std::nullopt};
}

LineBundleClass LineBundleClass::generic(int degree) { return {degree, TagKind::generic, 0, std::nullopt}; }

LineBundleClass LineBundleClass::unknown(int degree) { return {degree, TagKind::unknown, 0, std::nullopt}; }

LineBundleClass LineBundleClass::explicit_form(const Poly& form, int degree) {
  return {degree, TagKind::explicit_form, 0, form};
}

void LineBundleClass::validate(int g) const {
  if (g < 0) throw DomainError("genus must be nonnegative");
  switch (tag) {
    case TagKind::trivial:
      if (degree != 0) throw DomainError("trivial line bundle must have degree 0");
      break;
    case TagKind::canonical_power:
      if (k < 0) throw DomainError("canonical power exponent must be nonnegative");
      if (degree != k * (2 * g - 2)) throw DomainError("canonical power degree must equal k(2g-2)");
      break;
    case TagKind::explicit_form: {
      if (g != 0) throw DomainError("explicit sections are only supported on the projective line");
      if (!form) throw DomainError("explicit line bundle without a form");
      const VarSet base{Var::u, Var::v};
      for (Var w : form->support().list()) {
        if (!base.contains(w)) throw DomainError("explicit form must be a binary form in u, v");
      }
      if (!form->is_homogeneous(base, degree)) {
        throw DomainError("explicit form is not homogeneous of degree " + std::to_string(degree));
      }
      break;
    }
    case TagKind::generic:
    case TagKind::unknown:
      break;
  }
}

H0Answer h0(const LineBundleClass& line, int g, H0Policy policy) {
  line.validate(g);
  const int deg = line.degree;
  if (deg < 0) return H0Answer::exactly(0);
  switch (line.tag) {
    case TagKind::trivial:
      return H0Answer::exactly(1);
    case TagKind::canonical_power:
      if (line.k == 0) return H0Answer::exactly(1);
      if (g == 0) return H0Answer::exactly(0);
      if (g == 1) return H0Answer::exactly(1);
      if (line.k == 1) return H0Answer::exactly(g);
      return H0Answer::exactly((2 * line.k - 1) * (g - 1));
    case TagKind::explicit_form:
      return H0Answer::exactly(deg + 1);
    case TagKind::generic:
    case TagKind::unknown:
      break;
  }
  if (deg > 2 * g - 2) return H0Answer::exactly(deg - g + 1);
  const int rr = std::max(0, deg - g + 1);
  if (line.tag == TagKind::generic && policy.general_position) return H0Answer::exactly(rr);
  // Clifford: h0 <= deg/2 + 1 in the special range.
  return {rr, deg / 2 + 1, false};
}

LineBundleClass serre_dual(const LineBundleClass& line, int g) {
  line.validate(g);
  const int deg = 2 * g - 2 - line.degree;
  switch (line.tag) {
    case TagKind::trivial:
      return LineBundleClass::canonical_power(1, g);
    case TagKind::canonical_power:
      if (line.k <= 1) return LineBundleClass::canonical_power(1 - line.k, g);
      if (g == 1) return LineBundleClass::trivial();
      return LineBundleClass::unknown(deg);
    case TagKind::generic:
      return LineBundleClass::generic(deg);
    case TagKind::explicit_form:
    case TagKind::unknown:
      return LineBundleClass::unknown(deg);
  }
  return LineBundleClass::unknown(deg);
}

H0Answer h1(const LineBundleClass& line, int g, H0Policy policy) { return h0(serre_dual(line, g), g, policy); }

LineBundleClass tensor(const LineBundleClass& a, const LineBundleClass& b, int g) {
  a.validate(g);
  b.validate(g);
  if (a.tag == TagKind::trivial) return b;
  if (b.tag == TagKind::trivial) return a;
  const int deg = a.degree + b.degree;
  if (a.tag == TagKind::canonical_power && b.tag == TagKind::canonical_power) {
    return LineBundleClass::canonical_power(a.k + b.k, g);
  }
  const auto generic_like = [](TagKind t) { return t == TagKind::generic || t == TagKind::canonical_power; };
  if ((a.tag == TagKind::generic && generic_like(b.tag)) || (b.tag == TagKind::generic && generic_like(a.tag))) {
    return LineBundleClass::generic(deg);
  }
  if (a.tag == TagKind::explicit_form && b.tag == TagKind::explicit_form) {
    return LineBundleClass::explicit_form(*a.form * *b.form, deg);
  }
  return LineBundleClass::unknown(deg);
}

std::vector<Poly> section_basis_p1(int n) {
  std::vector<Poly> out;
  for (int j = 0; j <= n; ++j) {
    Exps e{};
    e[static_cast<size_t>(Var::u)] = n - j;
    e[static_cast<size_t>(Var::v)] = j;
    out.push_back(Poly::monomial(e, 1).with_vars(VarSet{Var::u, Var::v}));
  }
  return out;
}

}  // namespace spectra
