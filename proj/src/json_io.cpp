#include "spectra/json_io.hpp"

#include <fstream>
#include <sstream>

#include "spectra/errors.hpp"

namespace spectra {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int get_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

long long get_ll(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

bool get_bool(const Json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
  return j.at(key).get<bool>();
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw ParseError("coefficient must be a decimal string or integer");
}

TagKind tag_from_string(const std::string& s) {
  if (s == "trivial") return TagKind::trivial;
  if (s == "canonical_power") return TagKind::canonical_power;
  if (s == "generic") return TagKind::generic;
  if (s == "explicit") return TagKind::explicit_form;
  if (s == "unknown") return TagKind::unknown;
  throw ParseError("unknown line-bundle tag '" + s + "'");
}

Json p1_point_to_json(const P1Point& p) { return Json::array({to_string(p.first), to_string(p.second)}); }

}  // namespace

Json poly_to_json(const Poly& p) {
  const std::vector<Var> vars = p.vars().united(p.support()).list();
  Json names = Json::array();
  for (Var v : vars) names.push_back(std::string(1, var_name(v)));
  Json terms = Json::array();
  for (const auto& [exps, c] : p.terms()) {
    Json e = Json::array();
    for (Var v : vars) e.push_back(exps[static_cast<size_t>(v)]);
    terms.push_back(Json::array({e, to_string(c)}));
  }
  return {{"vars", names}, {"terms", terms}};
}

Poly poly_from_json(const Json& j) {
  try {
    if (j.is_string()) return Poly::parse(j.get<std::string>());
    if (j.is_number_integer()) return Poly(j.get<long>());
    const Json& names = require(j, "vars");
    if (!names.is_array()) throw ParseError("'vars' must be an array");
    std::vector<Var> vars;
    VarSet declared;
    for (const auto& n : names) {
      if (!n.is_string()) throw ParseError("variable names must be strings");
      const auto v = var_from_name(n.get<std::string>());
      if (!v) throw ParseError("unknown variable '" + n.get<std::string>() + "'");
      if (declared.contains(*v)) throw ParseError("duplicate variable '" + n.get<std::string>() + "'");
      vars.push_back(*v);
      declared.insert(*v);
    }
    Poly out;
    for (const auto& term : require(j, "terms")) {
      if (!term.is_array() || term.size() != 2 || !term[0].is_array()) throw ParseError("term must be [[exps], coeff]");
      if (term[0].size() != vars.size()) throw ParseError("exponent vector does not match variable arity");
      Exps exps{};
      for (size_t k = 0; k < vars.size(); ++k) {
        const int e = term[0][k].get<int>();
        if (e < 0) throw ParseError("negative exponent");
        exps[static_cast<size_t>(vars[k])] = e;
      }
      out += Poly::monomial(exps, rat_from_json(term[1]));
    }
    return out.with_vars(declared);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad polynomial: ") + e.what());
  }
}

Json line_bundle_to_json(const LineBundleClass& l) {
  Json tag = {{"kind", to_string(l.tag)}};
  if (l.tag == TagKind::canonical_power) tag["k"] = l.k;
  if (l.tag == TagKind::explicit_form && l.form) tag["form"] = poly_to_json(*l.form);
  return {{"degree", l.degree}, {"tag", tag}};
}

LineBundleClass line_bundle_from_json(const Json& j) {
  LineBundleClass l;
  l.degree = get_int(j, "degree");
  const Json& tag = require(j, "tag");
  const std::string kind = tag.is_string() ? tag.get<std::string>() : require(tag, "kind").get<std::string>();
  l.tag = tag_from_string(kind);
  if (l.tag == TagKind::canonical_power) l.k = get_int(tag, "k");
  if (l.tag == TagKind::explicit_form) l.form = poly_from_json(require(tag, "form"));
  return l;
}

WeierstrassModel model_from_json(const Json& j) {
  const int g = get_int(j, "g");
  const int d = get_int(j, "d");
  const std::string base = j.value("base", std::string(j.contains("a4") ? "p1_explicit" : "abstract"));
  BaseKind kind;
  if (base == "p1_explicit") {
    kind = BaseKind::p1_explicit;
  } else if (base == "abstract") {
    kind = BaseKind::abstract;
  } else {
    throw ParseError("base must be 'p1_explicit' or 'abstract'");
  }
  std::optional<Poly> a4, a6;
  if (j.contains("a4")) a4 = poly_from_json(j.at("a4"));
  if (j.contains("a6")) a6 = poly_from_json(j.at("a6"));
  if (kind == BaseKind::p1_explicit && (!a4 || !a6)) throw ParseError("explicit model needs a4 and a6");
  ModelOptions opts;
  opts.allow_cusps = get_bool(j, "allow_cusps", false);
  return build_model(g, d, kind, a4, a6, opts);
}

Json model_to_json(const WeierstrassModel& m) {
  Json out = {{"g", m.g}, {"d", m.d}, {"base", m.explicit_p1() ? "p1_explicit" : "abstract"}};
  if (m.a4) out["a4"] = poly_to_json(*m.a4);
  if (m.a6) out["a6"] = poly_to_json(*m.a6);
  if (m.delta) out["delta"] = poly_to_json(*m.delta);
  out["validation"] = {{"non_isotrivial", to_string(m.report.non_isotrivial)},
                       {"delta_nonzero", to_string(m.report.delta_nonzero)},
                       {"delta_squarefree", to_string(m.report.delta_squarefree)},
                       {"disjoint_zeros", to_string(m.report.disjoint_zeros)},
                       {"warnings", m.report.warnings}};
  return out;
}

Json sheaf_sum_to_json(const SheafSum& s) {
  Json summands = Json::array();
  for (const auto& l : s.summands) summands.push_back(line_bundle_to_json(l));
  return {{"rank", s.rank()}, {"degree", s.degree()}, {"summands", summands}};
}

Json fiber_summary_to_json(const FiberSummary& f) {
  Json fibers = Json::array();
  for (const auto& s : f.fibers) {
    Json e = {{"count", s.count}, {"multiplicity", s.multiplicity}, {"type", s.type}};
    if (s.point) e["point"] = p1_point_to_json(*s.point);
    if (s.locus) e["locus"] = poly_to_json(*s.locus);
    fibers.push_back(e);
  }
  return {{"fibers", fibers},
          {"total_with_multiplicity", f.total_with_multiplicity},
          {"nodal_fiber_count", f.nodal_fiber_count},
          {"explicit_locations", f.explicit_locations}};
}

SpectralData spectral_from_json(const Json& j) {
  SpectralData sd;
  sd.r = get_int(j, "r");
  sd.e = get_int(j, "e");
  sd.mu = j.contains("mu") ? line_bundle_from_json(j.at("mu")) : LineBundleClass::unknown(sd.e);
  const Json& secs = require(j, "sections");
  if (!secs.is_object()) throw ParseError("'sections' must be an object keyed by pole order");
  for (const auto& [key, value] : secs.items()) {
    int i = 0;
    try {
      size_t used = 0;
      i = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("");
    } catch (const std::exception&) {
      throw ParseError("section key '" + key + "' is not an integer");
    }
    if (value.is_string() && value.get<std::string>() == "zero") {
      sd.sections[i] = SectionEntry::zero();
    } else if (value.is_string() && value.get<std::string>() == "nonzero_unknown") {
      sd.sections[i] = SectionEntry::nonzero_unknown();
    } else {
      sd.sections[i] = SectionEntry::of(poly_from_json(value));
    }
  }
  return sd;
}

Json spectral_to_json(const SpectralData& sd) {
  Json secs = Json::object();
  for (const auto& [i, entry] : sd.sections) {
    const std::string key = std::to_string(i);
    switch (entry.kind) {
      case SectionEntry::Kind::zero: secs[key] = "zero"; break;
      case SectionEntry::Kind::nonzero_unknown: secs[key] = "nonzero_unknown"; break;
      case SectionEntry::Kind::form: secs[key] = poly_to_json(entry.form); break;
    }
  }
  return {{"r", sd.r}, {"e", sd.e}, {"mu", line_bundle_to_json(sd.mu)}, {"sections", secs}};
}

Json certificate_to_json(const CurveCertificate& c) {
  return {{"property", to_string(c.property)},
          {"verdict", to_string(c.verdict)},
          {"witness", c.witness},
          {"reason", c.reason},
          {"certified", c.certified}};
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "yes") return Verdict::yes;
  if (s == "no") return Verdict::no;
  if (s == "unknown") return Verdict::unknown;
  throw ParseError("verdict must be yes, no or unknown");
}

Fiberwise fiberwise_from_string(const std::string& s) {
  if (s == "semistable_general") return Fiberwise::semistable_general;
  if (s == "semistable_all") return Fiberwise::semistable_all;
  if (s == "regular_all") return Fiberwise::regular_all;
  if (s == "unknown") return Fiberwise::unknown;
  throw ParseError("unknown fiberwise value '" + s + "'");
}

FiberBundleDesc fiber_type_from_json(const Json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "distinct_line_bundles" || kind == "distinct") return FiberBundleDesc::distinct(get_int(j, "r"));
  if (kind == "atiyah") return FiberBundleDesc::atiyah(get_int(j, "r"));
  if (kind == "split_pair") return FiberBundleDesc::split_pair(j.contains("l_deg") ? get_int(j, "l_deg") : 1);
  throw ParseError("unknown fiber type '" + kind + "'");
}

Json fiber_type_to_json(const FiberBundleDesc& f) {
  Json out = {{"kind", to_string(f.kind)}, {"r", f.r}};
  if (f.kind == FiberKind::split_pair) out["l_deg"] = f.l_deg;
  return out;
}

ClassifyInput classify_input_from_json(const Json& j) {
  try {
    ClassifyInput in;
    in.bundle.r = get_int(j, "r");
    in.bundle.c1_sq = j.contains("c1_sq") ? get_ll(j, "c1_sq") : 0;
    in.bundle.c2 = get_ll(j, "c2");
    in.bundle.vertical_det = get_bool(j, "vertical_det", true);
    in.bundle.fiberwise = fiberwise_from_string(j.value("fiberwise", std::string("unknown")));
    in.spectral_reduced = verdict_from_string(j.value("spectral_reduced", std::string("unknown")));
    in.spectral_integral = verdict_from_string(j.value("spectral_integral", std::string("unknown")));
    in.fiberwise_regular = verdict_from_string(j.value("fiberwise_regular", std::string("unknown")));
    if (j.contains("fiber_type")) in.fiber_type = fiber_type_from_json(j.at("fiber_type"));
    in.bundle.validate();
    return in;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad bundle: ") + e.what());
  }
}

Json bundle_to_json(const BundleNumerics& b) {
  return {{"r", b.r},
          {"c1_sq", b.c1_sq},
          {"c2", b.c2},
          {"vertical_det", b.vertical_det},
          {"fiberwise", to_string(b.fiberwise)}};
}

Json reason_to_json(const Reason& r) { return {{"rule", r.rule}, {"anchor", r.anchor}, {"inputs", r.inputs}}; }

Json higgs_verdict_to_json(const HiggsVerdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons) reasons.push_back(reason_to_json(r));
  Json space = {{"kind", to_string(v.higgs_space)}};
  if (v.higgs_space == HiggsSpace::scalar_only) space["dim"] = v.scalar_dim;
  return {{"higgs_space", space},
          {"conjecture_case", to_string(v.conjecture_case)},
          {"genericity", v.genericity},
          {"reasons", reasons},
          {"notes", v.notes}};
}

Json class_verdict_to_json(const ClassVerdict& v) {
  Json reasons = Json::array();
  for (const auto& r : v.reasons) reasons.push_back(reason_to_json(r));
  return {{"verdict", to_string(v.verdict)}, {"dim", v.dim}, {"reasons", reasons}, {"notes", v.notes}};
}

Json poly_vector_to_json(const PolyVector& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

Json torsion_report_to_json(const TorsionFreeReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"psi", poly_vector_to_json(s.psi)},
                       {"annihilated", s.annihilated},
                       {"in_image", s.in_image}});
  }
  return {{"samples", samples},
          {"passed", r.passed},
          {"total", r.samples.size()},
          {"converse_checked", r.converse_checked},
          {"converse_failures", r.converse_failures},
          {"all_passed", r.all_passed()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace spectra
