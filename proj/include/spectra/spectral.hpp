#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spectra/basecurve.hpp"
#include "spectra/poly.hpp"
#include "spectra/weierstrass.hpp"

namespace spectra {

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

enum class CurveProperty { reduced, integral, smooth, connected, base_point_free };
std::string to_string(CurveProperty p);

struct CurveCertificate {
  CurveProperty property = CurveProperty::reduced;
  Verdict verdict = Verdict::unknown;
  nlohmann::json witness = nlohmann::json::object();
  std::string reason;
  /// False when the verdict rests on an assumed genericity statement.
  bool certified = true;
};

struct SectionEntry {
  enum class Kind { form, zero, nonzero_unknown };
  Kind kind = Kind::zero;
  Poly form;  // binary form in u, v when kind == form (may be the zero form)

  static SectionEntry of(const Poly& p) { return {Kind::form, p}; }
  static SectionEntry zero() { return {Kind::zero, Poly()}; }
  static SectionEntry nonzero_unknown() { return {Kind::nonzero_unknown, Poly()}; }
  [[nodiscard]] bool is_zero() const { return kind == Kind::zero || (kind == Kind::form && form.is_zero()); }
};

/// Spectral data (s_2, ..., s_r, s_0) with s_i a section of μ ⊗ L^{-i}.
struct SpectralData {
  int r = 2;
  int e = 0;
  LineBundleClass mu = LineBundleClass::unknown(0);
  std::map<int, SectionEntry> sections;

  /// 0, 2, 3, ..., r.
  static std::vector<int> indices(int r);
  /// Builds explicit data from forms indexed by pole order.
  static SpectralData from_forms(int r, int e, const std::map<int, Poly>& forms);

  [[nodiscard]] bool is_explicit() const;
  [[nodiscard]] const SectionEntry& entry(int i) const;
  /// Explicit form of s_i (zero form for the zero symbol).
  [[nodiscard]] Poly form(int i) const;
  /// Checks indices, degrees e - i d, forced zeros and non-vanishing.
  void validate(int d) const;
};

struct ForcedVanishing {
  std::vector<int> indices;  // j in 2..r with e < j d
  int sigma_multiplicity = 0;
  bool not_integral = false;
  bool not_reduced = false;
};
ForcedVanishing forced_vanishing(int r, int d, int e);

/// Multiplicity of the section curve in C given which s_i vanish.
int sigma_multiplicity(int r, const std::vector<int>& zero_indices);

/// Degree of the direct image of V(Σ): deg δ - e.
int grr_degree(int deg_delta, int e);

/// Monomial x^j y^k (k <= 1) of pole order i = 2j + 3k; 1 for i = 0.
Poly pole_order_monomial(int i);

/// y^2 - x^3 - a4 x - a6.
Poly weierstrass_poly(const WeierstrassModel& m);
/// Monic gcd of the nonzero explicit sections; nonconstant exactly when C
/// contains whole fibers.
Poly vertical_gcd(const SpectralData& sd);
/// F = sum_i s_i m_i.
Poly spectral_polynomial(const WeierstrassModel& m, const SpectralData& sd);

struct SpecializationOptions {
  int trials = 16;
  std::uint64_t seed = 0;
};

CurveCertificate reducedness_test(const WeierstrassModel& m, const SpectralData& sd, SpecializationOptions opts = {});
CurveCertificate smoothness_test(const WeierstrassModel& m, const SpectralData& sd, std::uint64_t seed = 0);
CurveCertificate connectedness_certificate(int r, int d, int e, int g);
/// Composite: combines vanishing, reducedness, smoothness and connectedness.
CurveCertificate integrality_test(const WeierstrassModel& m, const SpectralData& sd, const CurveCertificate& reduced,
                                  const CurveCertificate& smooth, const CurveCertificate& connected);

struct BasePointOptions {
  int samples = 100;
  std::uint64_t seed = 0;
};
/// Threshold criterion plus, on explicit models, a sampling search for
/// common zeros of the full monomial basis of |rΣ + μ|.
CurveCertificate base_point_free(const WeierstrassModel& m, int r, int e, BasePointOptions opts = {});

/// Regularity over b from smoothness of C over b; unknown otherwise.
Verdict regularity_inference(bool cover_smooth_over_b);

/// Arithmetic genus of a smooth member of |rΣ + μ|.
int spectral_genus(int r, int d, int e, int g);

/// Σ_{i in 0,2..r} max(0, e - i d + 1): sections of rΣ + μ on the projective line.
int monomial_count_p1(int r, int d, int e);

}  // namespace spectra
