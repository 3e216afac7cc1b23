#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "spectra/basecurve.hpp"
#include "spectra/higgs.hpp"
#include "spectra/poly.hpp"
#include "spectra/spectral.hpp"
#include "spectra/symkernel.hpp"
#include "spectra/weierstrass.hpp"

namespace spectra {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// Sparse term list {"vars": [...], "terms": [[[exps], "coeff"], ...]},
/// leading term first. Coefficients are decimal strings.
Json poly_to_json(const Poly& p);
/// Accepts the term-list object or an expression string.
Poly poly_from_json(const Json& j);

Json line_bundle_to_json(const LineBundleClass& l);
LineBundleClass line_bundle_from_json(const Json& j);

/// {g, d, base: "p1_explicit" | "abstract", a4?, a6?, allow_cusps?}.
WeierstrassModel model_from_json(const Json& j);
Json model_to_json(const WeierstrassModel& m);
Json sheaf_sum_to_json(const SheafSum& s);
Json fiber_summary_to_json(const FiberSummary& f);

/// {r, e, mu?, sections: {"0": poly | "zero" | "nonzero_unknown", ...}}.
SpectralData spectral_from_json(const Json& j);
Json spectral_to_json(const SpectralData& sd);

Json certificate_to_json(const CurveCertificate& c);

/// {r, c1_sq, c2, vertical_det, fiberwise, spectral_reduced?,
///  spectral_integral?, fiberwise_regular?, fiber_type?}.
ClassifyInput classify_input_from_json(const Json& j);
FiberBundleDesc fiber_type_from_json(const Json& j);
Json fiber_type_to_json(const FiberBundleDesc& f);
Json bundle_to_json(const BundleNumerics& b);

Json reason_to_json(const Reason& r);
Json higgs_verdict_to_json(const HiggsVerdict& v);
Json class_verdict_to_json(const ClassVerdict& v);

Json torsion_report_to_json(const TorsionFreeReport& r);
Json poly_vector_to_json(const PolyVector& v);

Verdict verdict_from_string(const std::string& s);
Fiberwise fiberwise_from_string(const std::string& s);

/// Reads and parses a JSON file; ParseError on I/O or syntax failure.
Json read_json_file(const std::string& path);

}  // namespace spectra
