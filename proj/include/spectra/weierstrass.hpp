#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spectra/basecurve.hpp"
#include "spectra/poly.hpp"

namespace spectra {

enum class BaseKind { p1_explicit, abstract };

enum class Check { holds, fails, assumed };
std::string to_string(Check c);

struct ModelOptions {
  /// Downgrade cuspidal-fiber rejection to a warning.
  bool allow_cusps = false;
};

struct ValidationReport {
  Check non_isotrivial = Check::holds;
  Check delta_nonzero = Check::assumed;
  Check delta_squarefree = Check::assumed;
  Check disjoint_zeros = Check::assumed;
  std::vector<std::string> warnings;
};

/// y^2 = x^3 + a4 x + a6 over a base curve of genus g with deg L = d.
struct WeierstrassModel {
  int g = 0;
  int d = 1;
  BaseKind kind = BaseKind::abstract;
  std::optional<Poly> a4;
  std::optional<Poly> a6;
  std::optional<Poly> delta;
  ValidationReport report;

  /// False when cusps were allowed through; downstream verdicts are then
  /// unsupported.
  [[nodiscard]] bool supported() const { return report.disjoint_zeros != Check::fails; }
  [[nodiscard]] bool explicit_p1() const { return kind == BaseKind::p1_explicit; }
  /// Fundamental line bundle L^k as a class on B.
  [[nodiscard]] LineBundleClass fundamental_power(int k) const;
};

WeierstrassModel build_model(int g, int d, BaseKind kind, std::optional<Poly> a4 = std::nullopt,
                             std::optional<Poly> a6 = std::nullopt, ModelOptions options = {});

/// -16(4 a4^3 + 27 a6^2).
Poly discriminant_poly(const Poly& a4, const Poly& a6);

struct DiscriminantInfo {
  int degree = 0;
  std::optional<Poly> section;  // absent for abstract models
};
DiscriminantInfo discriminant_section(const WeierstrassModel& m);

/// Point [u:v] of the projective line.
using P1Point = std::pair<Rat, Rat>;

struct SingularFiber {
  std::optional<P1Point> point;  // rational location
  std::optional<Poly> locus;     // irreducible-over-Q factor otherwise
  int count = 1;                 // geometric points in the locus
  int multiplicity = 1;          // order of vanishing of the discriminant
  std::string type;              // "I<n>", "II", "cuspidal"
};

struct FiberSummary {
  std::vector<SingularFiber> fibers;
  int total_with_multiplicity = 0;
  int nodal_fiber_count = 0;  // geometric points, nodal type
  bool explicit_locations = false;
};
FiberSummary singular_fibers(const WeierstrassModel& m);

struct SheafSum {
  std::vector<LineBundleClass> summands;
  [[nodiscard]] int rank() const { return static_cast<int>(summands.size()); }
  [[nodiscard]] int degree() const;
};

enum class SheafKind { o_r_sigma, ideal_z, sym_omega, sym_theta };

struct SheafExpr {
  SheafKind kind = SheafKind::o_r_sigma;
  int r = 0;
  std::optional<LineBundleClass> twist;  // pulled back from B
};

struct Pushforward {
  SheafSum r0;
  std::optional<SheafSum> r1;  // absent when not tabulated
};

/// Closed table of direct images along the fibration, twisted by the
/// projection formula. Throws UnsupportedRegistry outside the table.
Pushforward pushforward(const WeierstrassModel& m, const SheafExpr& expr);

/// h0 on the surface as the sum of h0 over the summands of R0.
H0Answer h0_on_surface(const WeierstrassModel& m, const SheafExpr& expr, H0Policy policy = {});

struct CanonicalBundle {
  LineBundleClass base_class;
  bool pulled_back = true;
};
CanonicalBundle canonical_bundle(const WeierstrassModel& m);

struct KodairaSpencer {
  int degree = 0;
  bool positive = false;
  bool nonnegative = false;
  bool nonzero_section = true;
};
KodairaSpencer kodaira_spencer(const WeierstrassModel& m);

}  // namespace spectra
