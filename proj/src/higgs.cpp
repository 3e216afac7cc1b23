#include "spectra/higgs.hpp"

#include "spectra/basecurve.hpp"
#include "spectra/errors.hpp"

namespace spectra {

std::string to_string(Fiberwise f) {
  switch (f) {
    case Fiberwise::semistable_general: return "semistable_general";
    case Fiberwise::semistable_all: return "semistable_all";
    case Fiberwise::regular_all: return "regular_all";
    case Fiberwise::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(HiggsSpace s) {
  switch (s) {
    case HiggsSpace::scalar_only: return "scalar_only";
    case HiggsSpace::vertical_only: return "vertical_only";
    case HiggsSpace::unconstrained: return "unconstrained";
    case HiggsSpace::unknown: return "unknown";
  }
  return "unknown";
}

std::string to_string(ConjectureCase c) {
  switch (c) {
    case ConjectureCase::holds: return "holds";
    case ConjectureCase::not_applicable: return "not_applicable";
    case ConjectureCase::unknown: return "unknown";
  }
  return "unknown";
}

void BundleNumerics::validate() const {
  if (r < 1) throw DomainError("rank must be at least 1");
  if (vertical_det && c1_sq != 0) throw DomainError("a vertical determinant has c1^2 = 0");
}

int hitchin_dim(int g, int r) {
  if (g < 0 || r < 1) throw DomainError("hitchin_dim needs g >= 0 and r >= 1");
  int total = 0;
  for (int i = 1; i <= r; ++i) total += h0(LineBundleClass::canonical_power(i, g), g).lower;
  return total;
}

LambdaDegrees lambda_degrees(int r, int d, int e, int g) {
  if (r < 2) throw DomainError("lambda degrees need r >= 2");
  LambdaDegrees out;
  for (int i : SpectralData::indices(r)) {
    const int deg = (i - 1) * d - e + 2 * g - 2;
    out.degrees.emplace_back(i, deg);
    out.all_negative = out.all_negative && deg < 0;
  }
  return out;
}

ClassVerdict vertical_only(Verdict spectral_reduced, bool fiberwise_ss_general,
                           const std::optional<FiberBundleDesc>& fiber_type) {
  ClassVerdict out;
  if (fiber_type && fiber_type->kind != FiberKind::distinct_line_bundles) {
    const EndTwistRanks ranks = rank_pushforward_end_twists(*fiber_type);
    if (ranks.rank_vertical != ranks.rank_full) {
      out.verdict = Verdict::no;
      out.reasons.push_back({"vertical:counterexample-ranks", "vertical-fields:end-twist-ranks",
                             {{"fiber_type", to_string(fiber_type->kind)},
                              {"rank_vertical", ranks.rank_vertical},
                              {"rank_full", ranks.rank_full},
                              {"reference_cell", ranks.reference_cell}}});
      return out;
    }
  }
  if (spectral_reduced == Verdict::yes && fiberwise_ss_general) {
    out.verdict = Verdict::yes;
    out.reasons.push_back({"vertical:reduced-semistable", "vertical-fields:reduced-cover",
                           {{"spectral_reduced", "yes"}, {"semistable_general_fiber", true}}});
    return out;
  }
  out.verdict = Verdict::unknown;
  out.notes.push_back("sufficient conditions for vertical-only not established");
  return out;
}

ClassVerdict scalar_only(int r, int d, int e, int g, Verdict spectral_reduced, Verdict spectral_integral,
                         Verdict fiberwise_regular) {
  if (r < 2) throw DomainError("scalar_only needs r >= 2");
  ClassVerdict out;
  const LambdaDegrees lam = lambda_degrees(r, d, e, g);
  const int reduced_threshold = (r - 1) * d + 2 * g - 1;
  const bool integral_branch = spectral_integral == Verdict::yes && d >= 2 * g - 1;
  const bool reduced_branch =
      (spectral_reduced == Verdict::yes || spectral_integral == Verdict::yes) && e >= reduced_threshold;
  if (fiberwise_regular != Verdict::yes) {
    out.notes.push_back("fiberwise regularity not established");
    return out;
  }
  if (integral_branch && e < r * d) {
    out.notes.push_back("vacuous: an integral spectral curve needs e >= rd, but e = " + std::to_string(e));
  }
  nlohmann::json degrees = nlohmann::json::array();
  for (const auto& [i, deg] : lam.degrees) degrees.push_back({i, deg});
  if (reduced_branch) {
    out.reasons.push_back({"scalar:reduced-threshold", "scalar-fields:reduced-threshold",
                           {{"e", e}, {"threshold", reduced_threshold}, {"lambda_degrees", degrees}}});
  } else if (integral_branch && e >= r * d) {
    out.reasons.push_back({"scalar:integral-threshold", "scalar-fields:integral-threshold",
                           {{"d", d}, {"threshold", 2 * g - 1}, {"e", e}, {"lambda_degrees", degrees}}});
  } else {
    out.notes.push_back("neither sufficient condition holds");
    return out;
  }
  if (!lam.all_negative) throw Falsification("scalar-only fired with a nonnegative lambda degree");
  out.verdict = Verdict::yes;
  out.dim = g;
  out.reasons.push_back({"scalar:dimension", "scalar-fields:one-forms", {{"h0_omega_X", g}}});
  return out;
}

DiscriminantNumbers discriminant_numbers(const BundleNumerics& b) {
  const long long delta = 2LL * b.r * b.c2 - static_cast<long long>(b.r - 1) * b.c1_sq;
  return {delta, delta};
}

BundleNumerics end_bundle_numerics(const BundleNumerics& b) {
  if (b.r < 1) throw DomainError("rank must be at least 1");
  BundleNumerics w;
  w.vertical_det = true;
  w.c1_sq = 0;
  if (b.r == 1) {
    w.r = 1;
    w.c2 = 0;
  } else {
    w.r = b.r * b.r;
    w.c2 = discriminant_numbers(b).delta;
  }
  switch (b.fiberwise) {
    case Fiberwise::semistable_general: w.fiberwise = Fiberwise::semistable_general; break;
    case Fiberwise::semistable_all:
    case Fiberwise::regular_all: w.fiberwise = Fiberwise::semistable_all; break;
    case Fiberwise::unknown: w.fiberwise = Fiberwise::unknown; break;
  }
  return w;
}

CurveCertificate assumed_smooth_member() {
  CurveCertificate c;
  c.property = CurveProperty::smooth;
  c.verdict = Verdict::yes;
  c.certified = false;
  c.witness = {{"rule", "general-member"}};
  c.reason = "a general member of a base-point-free system on a smooth surface is smooth";
  return c;
}

HiggsVerdict conjecture_verdict(const WeierstrassModel& m, const BundleNumerics& b, const SpectralCertificates& certs) {
  b.validate();
  if (!b.vertical_det) {
    throw DomainError("conjecture pipeline needs a vertical determinant; reduce through end_bundle_numerics first");
  }
  if (b.r < 2) throw DomainError("conjecture pipeline needs r >= 2");
  HiggsVerdict out;
  const int r = b.r, d = m.d, g = m.g;
  const auto e = static_cast<int>(b.c2);
  const int threshold = r * d + 2 * g;
  if (e < threshold) {
    out.conjecture_case = ConjectureCase::not_applicable;
    out.reasons.push_back({"conjecture:threshold-unmet", "conjecture:threshold", {{"e", e}, {"threshold", threshold}}});
    return out;
  }
  out.reasons.push_back({"conjecture:threshold", "conjecture:threshold", {{"e", e}, {"threshold", threshold}}});

  const CurveCertificate bpf = certs.base_point_free ? *certs.base_point_free : base_point_free(m, r, e);
  if (bpf.verdict != Verdict::yes) {
    out.notes.push_back("base-point-freeness not certified");
    return out;
  }
  out.reasons.push_back({"conjecture:base-point-free", "linear-system:base-point-free", bpf.witness});

  if (!certs.smooth) {
    out.notes.push_back("no smoothness certificate for a member of the linear system");
    return out;
  }
  if (certs.smooth->verdict != Verdict::yes) {
    out.notes.push_back("attached spectral curve is not certified smooth");
    return out;
  }
  out.genericity = certs.smooth->certified ? "certified" : "assumed";
  out.reasons.push_back({"conjecture:smooth-member", "conjecture:general-member",
                         {{"genericity", out.genericity}, {"witness", certs.smooth->witness}}});

  const Verdict regular = regularity_inference(true);
  out.reasons.push_back({"conjecture:regularity", "spectral:smooth-implies-regular", {{"cover_smooth", true}}});

  // Smooth implies reduced; e >= rd + 2g >= (r-1)d + 2g - 1.
  const ClassVerdict scalar = scalar_only(r, d, e, g, Verdict::yes, Verdict::unknown, regular);
  if (scalar.verdict != Verdict::yes) throw Falsification("threshold met but scalar-only did not fire");
  out.reasons.insert(out.reasons.end(), scalar.reasons.begin(), scalar.reasons.end());
  out.reasons.push_back({"conjecture:scalar-transfer", "conjecture:scalar-pullback",
                         {{"scalar_dim", scalar.dim}}});
  out.higgs_space = HiggsSpace::scalar_only;
  out.scalar_dim = scalar.dim;
  out.conjecture_case = ConjectureCase::holds;
  return out;
}

HiggsVerdict classify(const WeierstrassModel& m, const ClassifyInput& in) {
  const BundleNumerics& b = in.bundle;
  b.validate();
  HiggsVerdict out;
  const bool ss_general = b.fiberwise != Fiberwise::unknown || in.fiberwise_regular == Verdict::yes;
  const Verdict reduced = in.spectral_integral == Verdict::yes ? Verdict::yes : in.spectral_reduced;
  const ClassVerdict vertical = vertical_only(reduced, ss_general, in.fiber_type);
  out.reasons.insert(out.reasons.end(), vertical.reasons.begin(), vertical.reasons.end());
  out.notes.insert(out.notes.end(), vertical.notes.begin(), vertical.notes.end());

  ClassVerdict scalar;
  if (b.r >= 2 && vertical.verdict != Verdict::no) {
    const Verdict regular = b.fiberwise == Fiberwise::regular_all ? Verdict::yes : in.fiberwise_regular;
    scalar = scalar_only(b.r, m.d, static_cast<int>(b.c2), m.g, reduced, in.spectral_integral, regular);
    out.reasons.insert(out.reasons.end(), scalar.reasons.begin(), scalar.reasons.end());
    out.notes.insert(out.notes.end(), scalar.notes.begin(), scalar.notes.end());
  }
  if (scalar.verdict == Verdict::yes) {
    out.higgs_space = HiggsSpace::scalar_only;
    out.scalar_dim = scalar.dim;
  } else if (vertical.verdict == Verdict::yes) {
    out.higgs_space = HiggsSpace::vertical_only;
  } else if (vertical.verdict == Verdict::no) {
    out.higgs_space = HiggsSpace::unconstrained;
  }

  if (!b.vertical_det) {
    out.conjecture_case = ConjectureCase::unknown;
    out.notes.push_back("determinant not vertical: apply the pipeline to End V (see end_bundle_numerics)");
    return out;
  }
  if (b.r < 2) return out;
  const HiggsVerdict conj = conjecture_verdict(m, b, in.certs);
  out.conjecture_case = conj.conjecture_case;
  out.genericity = conj.genericity;
  for (const auto& r : conj.reasons) out.reasons.push_back(r);
  out.notes.insert(out.notes.end(), conj.notes.begin(), conj.notes.end());
  if (conj.conjecture_case == ConjectureCase::holds && out.higgs_space != HiggsSpace::scalar_only) {
    out.higgs_space = HiggsSpace::scalar_only;
    out.scalar_dim = conj.scalar_dim;
  }
  return out;
}

}  // namespace spectra
