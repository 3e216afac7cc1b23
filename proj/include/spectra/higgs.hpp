#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spectra/fibercalc.hpp"
#include "spectra/spectral.hpp"
#include "spectra/weierstrass.hpp"

namespace spectra {

enum class Fiberwise { semistable_general, semistable_all, regular_all, unknown };
std::string to_string(Fiberwise f);

struct BundleNumerics {
  int r = 1;
  long long c1_sq = 0;
  long long c2 = 0;
  bool vertical_det = true;
  Fiberwise fiberwise = Fiberwise::unknown;

  /// Throws DomainError on r < 1 or a vertical determinant with c1^2 != 0.
  void validate() const;
};

enum class HiggsSpace { scalar_only, vertical_only, unconstrained, unknown };
std::string to_string(HiggsSpace s);

enum class ConjectureCase { holds, not_applicable, unknown };
std::string to_string(ConjectureCase c);

/// One applied rule: identifier, anchor naming the statement it rests on,
/// and the concrete instance.
struct Reason {
  std::string rule;
  std::string anchor;
  nlohmann::json inputs = nlohmann::json::object();
};

struct ClassVerdict {
  Verdict verdict = Verdict::unknown;
  int dim = 0;  // scalar_only: dimension of the scalar family
  std::vector<Reason> reasons;
  std::vector<std::string> notes;
};

struct HiggsVerdict {
  HiggsSpace higgs_space = HiggsSpace::unknown;
  int scalar_dim = 0;
  ConjectureCase conjecture_case = ConjectureCase::unknown;
  /// Certified when the smoothness certificate is exact, assumed otherwise.
  std::string genericity = "none";
  std::vector<Reason> reasons;
  std::vector<std::string> notes;
};

/// Σ_{i=1..r} h0(K_B^i).
int hitchin_dim(int g, int r);

struct LambdaDegrees {
  std::vector<std::pair<int, int>> degrees;  // (i, (i-1)d - e + 2g - 2)
  bool all_negative = true;
};
LambdaDegrees lambda_degrees(int r, int d, int e, int g);

ClassVerdict vertical_only(Verdict spectral_reduced, bool fiberwise_ss_general,
                           const std::optional<FiberBundleDesc>& fiber_type = std::nullopt);

ClassVerdict scalar_only(int r, int d, int e, int g, Verdict spectral_reduced, Verdict spectral_integral,
                         Verdict fiberwise_regular);

struct DiscriminantNumbers {
  long long delta = 0;
  long long bogomolov = 0;
};
DiscriminantNumbers discriminant_numbers(const BundleNumerics& b);

/// Numerics of End V = V ⊗ V^*.
BundleNumerics end_bundle_numerics(const BundleNumerics& b);

struct SpectralCertificates {
  std::optional<CurveCertificate> base_point_free;
  std::optional<CurveCertificate> smooth;
};

/// Smoothness of a general member taken on trust; only honored when the
/// linear system is base-point free.
CurveCertificate assumed_smooth_member();

/// Throws DomainError when the determinant is not vertical.
HiggsVerdict conjecture_verdict(const WeierstrassModel& m, const BundleNumerics& b, const SpectralCertificates& certs);

/// Inputs of the full classification.
struct ClassifyInput {
  BundleNumerics bundle;
  Verdict spectral_reduced = Verdict::unknown;
  Verdict spectral_integral = Verdict::unknown;
  Verdict fiberwise_regular = Verdict::unknown;
  std::optional<FiberBundleDesc> fiber_type;
  SpectralCertificates certs;
};

HiggsVerdict classify(const WeierstrassModel& m, const ClassifyInput& in);

}  // namespace spectra
