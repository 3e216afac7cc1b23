#include "spectra/cli.hpp"

#include <cstdlib>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/fibercalc.hpp"
#include "spectra/higgs.hpp"
#include "spectra/spectral.hpp"
#include "spectra/symkernel.hpp"

namespace spectra {

std::string to_string(Command c) {
  switch (c) {
    case Command::analyze_fibration: return "analyze-fibration";
    case Command::spectral_check: return "spectral-check";
    case Command::higgs_classify: return "higgs-classify";
    case Command::hitchin_dim: return "hitchin-dim";
    case Command::symkernel_verify: return "symkernel-verify";
    case Command::sweep: return "sweep";
  }
  return "unknown";
}

std::uint64_t resolve_seed(std::optional<std::uint64_t> explicit_seed) {
  if (explicit_seed) return *explicit_seed;
  if (const char* env = std::getenv("SPECTRA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw ParseError("SPECTRA_SEED is not a nonnegative integer");
    }
  }
  return 0;
}

IntRange parse_range(const std::string& text) {
  auto to_int = [&text](const std::string& s) {
    try {
      size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw ParseError("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("bad range '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

namespace {

Json analyze_fibration(const RunConfig& cfg) {
  const WeierstrassModel m = model_from_json(read_json_file(cfg.model_path));
  const H0Policy policy{cfg.general_position};
  Json out = {{"model", model_to_json(m)}};
  const DiscriminantInfo disc = discriminant_section(m);
  out["discriminant"] = {{"degree", disc.degree}};
  if (disc.section) out["discriminant"]["section"] = poly_to_json(*disc.section);
  out["singular_fibers"] = fiber_summary_to_json(singular_fibers(m));
  const CanonicalBundle k = canonical_bundle(m);
  out["canonical_bundle"] = {{"class", line_bundle_to_json(k.base_class)}, {"pulled_back", k.pulled_back}};
  const KodairaSpencer ks = kodaira_spencer(m);
  out["kodaira_spencer"] = {{"degree", ks.degree},
                            {"positive", ks.positive},
                            {"nonnegative", ks.nonnegative},
                            {"nonzero_section", ks.nonzero_section}};
  Json registry = Json::array();
  auto add = [&](const std::string& name, const SheafExpr& expr) {
    const Pushforward p = pushforward(m, expr);
    const H0Answer h = h0_on_surface(m, expr, policy);
    Json row = {{"sheaf", name}, {"r0", sheaf_sum_to_json(p.r0)},
                {"h0", {{"lower", h.lower}, {"upper", h.upper}, {"exact", h.exact}}}};
    if (p.r1) row["r1"] = sheaf_sum_to_json(*p.r1);
    registry.push_back(row);
  };
  for (int r = -1; r <= 3; ++r) add("O(" + std::to_string(r) + "Sigma)", {SheafKind::o_r_sigma, r, std::nullopt});
  add("I_Z", {SheafKind::ideal_z, 0, std::nullopt});
  add("Sym^2 Omega_X", {SheafKind::sym_omega, 2, std::nullopt});
  add("Sym^2 Theta_X", {SheafKind::sym_theta, 2, std::nullopt});
  out["pushforward"] = registry;
  return out;
}

struct SpectralCerts {
  CurveCertificate reduced, smooth, connected, integral, bpf;
};

SpectralCerts certify(const WeierstrassModel& m, const SpectralData& sd, const RunConfig& cfg) {
  SpectralCerts c;
  c.reduced = reducedness_test(m, sd, {cfg.trials, cfg.seed});
  if (sd.is_explicit() && m.explicit_p1()) {
    c.smooth = smoothness_test(m, sd, cfg.seed);
  } else {
    c.smooth.property = CurveProperty::smooth;
    c.smooth.reason = "smoothness needs explicit sections over an explicit base";
  }
  c.connected = connectedness_certificate(sd.r, m.d, sd.e, m.g);
  c.integral = integrality_test(m, sd, c.reduced, c.smooth, c.connected);
  c.bpf = base_point_free(m, sd.r, sd.e, {100, cfg.seed});
  return c;
}

Json spectral_check(const RunConfig& cfg) {
  const WeierstrassModel m = model_from_json(read_json_file(cfg.model_path));
  const SpectralData sd = spectral_from_json(read_json_file(cfg.spectral_path));
  sd.validate(m.d);
  const ForcedVanishing fv = forced_vanishing(sd.r, m.d, sd.e);
  const SpectralCerts c = certify(m, sd, cfg);
  return {{"spectral", spectral_to_json(sd)},
          {"forced_vanishing",
           {{"indices", fv.indices},
            {"sigma_multiplicity", fv.sigma_multiplicity},
            {"not_integral", fv.not_integral},
            {"not_reduced", fv.not_reduced}}},
          {"spectral_genus", spectral_genus(sd.r, m.d, sd.e, m.g)},
          {"certificates",
           {{"reduced", certificate_to_json(c.reduced)},
            {"smooth", certificate_to_json(c.smooth)},
            {"connected", certificate_to_json(c.connected)},
            {"integral", certificate_to_json(c.integral)},
            {"base_point_free", certificate_to_json(c.bpf)}}},
          {"regular_over_smooth_fibers", to_string(regularity_inference(c.smooth.verdict == Verdict::yes))}};
}

Json higgs_classify(const RunConfig& cfg) {
  const WeierstrassModel m = model_from_json(read_json_file(cfg.model_path));
  ClassifyInput in = classify_input_from_json(read_json_file(cfg.bundle_path));
  if (!cfg.fiber_type.empty()) {
    Json ft = {{"kind", cfg.fiber_type}, {"r", in.bundle.r}};
    in.fiber_type = fiber_type_from_json(ft);
  }
  Json out;
  if (!cfg.spectral_path.empty()) {
    const SpectralData sd = spectral_from_json(read_json_file(cfg.spectral_path));
    sd.validate(m.d);
    if (sd.r != in.bundle.r) throw DomainError("spectral rank differs from the bundle rank");
    if (sd.e != in.bundle.c2) throw DomainError("c2 must equal the twist degree e of the spectral data");
    const SpectralCerts c = certify(m, sd, cfg);
    if (c.reduced.verdict != Verdict::unknown) in.spectral_reduced = c.reduced.verdict;
    if (c.integral.verdict != Verdict::unknown) in.spectral_integral = c.integral.verdict;
    if (c.smooth.verdict == Verdict::yes) in.fiberwise_regular = regularity_inference(true);
    in.certs.base_point_free = c.bpf;
    in.certs.smooth = c.smooth;
    out["certificates"] = {{"reduced", certificate_to_json(c.reduced)},
                           {"smooth", certificate_to_json(c.smooth)},
                           {"integral", certificate_to_json(c.integral)},
                           {"base_point_free", certificate_to_json(c.bpf)}};
  }
  const HiggsVerdict v = classify(m, in);
  out["bundle"] = bundle_to_json(in.bundle);
  if (in.fiber_type) out["bundle"]["fiber_type"] = fiber_type_to_json(*in.fiber_type);
  const DiscriminantNumbers dn = discriminant_numbers(in.bundle);
  out["discriminant"] = {{"delta", dn.delta}, {"bogomolov", dn.bogomolov}};
  const BundleNumerics w = end_bundle_numerics(in.bundle);
  out["end_bundle"] = bundle_to_json(w);
  out["end_bundle"]["delta"] = discriminant_numbers(w).delta;
  out["hitchin_dim"] = hitchin_dim(m.g, in.bundle.r);
  out["verdict"] = higgs_verdict_to_json(v);
  return out;
}

Json hitchin(const RunConfig& cfg) {
  Json terms = Json::array();
  for (int i = 1; i <= cfg.r; ++i) {
    terms.push_back({{"i", i}, {"h0", h0(LineBundleClass::canonical_power(i, cfg.g), cfg.g).lower}});
  }
  return {{"g", cfg.g}, {"r", cfg.r}, {"hitchin_dim", hitchin_dim(cfg.g, cfg.r)}, {"terms", terms}};
}

Json symkernel(const RunConfig& cfg) {
  const Poly f = Poly::parse(cfg.f_expr);
  const Poly g = Poly::parse(cfg.g_expr);
  const SymPresentation p = delta_matrix(f, g, cfg.r);
  const PolyVector closed = kernel_generator(p);
  const PolyVector solved = kernel_solver(p);
  const TorsionFreeReport rep = torsion_free_witness(p, cfg.samples, cfg.seed);
  Json delta = Json::array();
  for (const auto& row : p.delta) delta.push_back(poly_vector_to_json(row));
  return {{"f", f.to_string()},
          {"g", g.to_string()},
          {"r", cfg.r},
          {"delta", delta},
          {"kernel_generator", poly_vector_to_json(closed)},
          {"kernel_solver", poly_vector_to_json(solved)},
          {"associates", associates(closed, solved)},
          {"torsion_free", torsion_report_to_json(rep)}};
}

Json sweep(const RunConfig& cfg) {
  Json rows = Json::array();
  for (int r = cfg.sweep_r.lo; r <= cfg.sweep_r.hi; ++r) {
    if (r < 2) throw DomainError("sweep needs r >= 2");
    for (int d = cfg.sweep_d.lo; d <= cfg.sweep_d.hi; ++d) {
      for (int g = cfg.sweep_g.lo; g <= cfg.sweep_g.hi; ++g) {
        const WeierstrassModel m = build_model(g, d, BaseKind::abstract);
        for (int e = cfg.sweep_e.lo; e <= cfg.sweep_e.hi; ++e) {
          BundleNumerics b;
          b.r = r;
          b.c2 = e;
          b.fiberwise = Fiberwise::unknown;
          SpectralCertificates certs;
          certs.smooth = assumed_smooth_member();
          const HiggsVerdict v = conjecture_verdict(m, b, certs);
          const ClassVerdict s = scalar_only(r, d, e, g, Verdict::yes, Verdict::unknown, Verdict::yes);
          Json anchors = Json::array();
          for (const auto& reason : v.reasons) anchors.push_back(reason.anchor);
          rows.push_back({{"r", r},
                          {"d", d},
                          {"g", g},
                          {"e", e},
                          {"threshold", r * d + 2 * g},
                          {"conjecture_case", to_string(v.conjecture_case)},
                          {"genericity", v.genericity},
                          {"scalar_only_if_reduced_regular", to_string(s.verdict)},
                          {"lambda_all_negative", lambda_degrees(r, d, e, g).all_negative},
                          {"anchors", anchors}});
        }
      }
    }
  }
  return {{"rows", rows}, {"row_count", rows.size()}};
}

void render_text(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (size_t i = 0; i < j.size(); ++i) render_text(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

std::string render_sweep(const Json& report) {
  std::ostringstream os;
  os << "r\td\tg\te\tthreshold\tconjecture\tscalar_only\tlambda_neg\n";
  for (const auto& row : report["result"]["rows"]) {
    os << row["r"] << '\t' << row["d"] << '\t' << row["g"] << '\t' << row["e"] << '\t' << row["threshold"] << '\t'
       << row["conjecture_case"].get<std::string>() << '\t'
       << row["scalar_only_if_reduced_regular"].get<std::string>() << '\t' << row["lambda_all_negative"] << '\n';
  }
  return os.str();
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  RunResult res;
  res.report = {{"schema", kSchemaVersion},
                {"command", to_string(cfg.command)},
                {"seed", cfg.seed},
                {"trials", cfg.trials},
                {"general_position", cfg.general_position}};
  auto fail = [&res](int code, const char* kind, const std::exception& e) {
    res.exit_code = code;
    res.report["error"] = {{"kind", kind}, {"message", e.what()}};
  };
  try {
    Json result;
    switch (cfg.command) {
      case Command::analyze_fibration: result = analyze_fibration(cfg); break;
      case Command::spectral_check: result = spectral_check(cfg); break;
      case Command::higgs_classify: result = higgs_classify(cfg); break;
      case Command::hitchin_dim: result = hitchin(cfg); break;
      case Command::symkernel_verify: result = symkernel(cfg); break;
      case Command::sweep: result = sweep(cfg); break;
    }
    res.report["result"] = std::move(result);
  } catch (const ParseError& e) {
    fail(1, "parse_error", e);
  } catch (const DomainError& e) {
    fail(1, "domain_error", e);
  } catch (const UnsupportedRegistry& e) {
    fail(1, "unsupported_registry", e);
  } catch (const HypothesisViolation& e) {
    fail(2, "hypothesis_violation", e);
  } catch (const Falsification& e) {
    fail(3, "falsification", e);
  } catch (const nlohmann::json::exception& e) {
    fail(1, "parse_error", e);
  }
  if (cfg.output == OutputFormat::json) {
    res.rendered = res.report.dump(2) + "\n";
  } else if (cfg.command == Command::sweep && res.exit_code == 0) {
    res.rendered = render_sweep(res.report);
  } else {
    std::ostringstream os;
    render_text(res.report, "", os);
    res.rendered = os.str();
  }
  return res;
}

}  // namespace spectra
