#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectra/cli.hpp"
#include "spectra/errors.hpp"
#include "spectra/fibercalc.hpp"
#include "spectra/higgs.hpp"
#include "spectra/json_io.hpp"
#include "spectra/spectral.hpp"
#include "spectra/symkernel.hpp"

namespace py = pybind11;
using namespace spectra;

namespace {

// JSON crosses the boundary as text; the Python package decodes it.
std::string dump(const Json& j) { return j.dump(); }

Var parse_var(const std::string& name) {
  if (name.size() == 1) {
    if (auto v = var_from_name(name)) return *v;
  }
  throw ParseError("unknown variable: " + name);
}

FiberBundleDesc fiber_desc(const std::string& kind, int r, int l_deg) {
  if (kind == "distinct") return FiberBundleDesc::distinct(r);
  if (kind == "atiyah") return FiberBundleDesc::atiyah(r);
  if (kind == "split_pair") return FiberBundleDesc::split_pair(l_deg);
  throw ParseError("unknown fiber type: " + kind);
}

Command parse_command(const std::string& name) {
  for (Command c : {Command::analyze_fibration, Command::spectral_check, Command::higgs_classify,
                    Command::hitchin_dim, Command::symkernel_verify, Command::sweep}) {
    if (to_string(c) == name) return c;
  }
  throw ParseError("unknown command: " + name);
}

std::pair<int, std::string> run_command(const std::string& command, const py::dict& opts) {
  RunConfig cfg;
  cfg.command = parse_command(command);
  for (const auto& [key_obj, value] : opts) {
    const auto key = py::cast<std::string>(key_obj);
    if (key == "model") cfg.model_path = py::cast<std::string>(value);
    else if (key == "bundle") cfg.bundle_path = py::cast<std::string>(value);
    else if (key == "spectral") cfg.spectral_path = py::cast<std::string>(value);
    else if (key == "fiber_type") cfg.fiber_type = py::cast<std::string>(value);
    else if (key == "g") cfg.g = py::cast<int>(value);
    else if (key == "r") cfg.r = py::cast<int>(value);
    else if (key == "f") cfg.f_expr = py::cast<std::string>(value);
    else if (key == "g_expr") cfg.g_expr = py::cast<std::string>(value);
    else if (key == "samples") cfg.samples = py::cast<int>(value);
    else if (key == "seed") cfg.seed = py::cast<std::uint64_t>(value);
    else if (key == "trials") cfg.trials = py::cast<int>(value);
    else if (key == "sweep_r") cfg.sweep_r = parse_range(py::cast<std::string>(value));
    else if (key == "sweep_d") cfg.sweep_d = parse_range(py::cast<std::string>(value));
    else if (key == "sweep_e") cfg.sweep_e = parse_range(py::cast<std::string>(value));
    else if (key == "sweep_g") cfg.sweep_g = parse_range(py::cast<std::string>(value));
    else throw ParseError("unknown option: " + key);
  }
  const RunResult res = run(cfg);
  return {res.exit_code, dump(res.report)};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations on Weierstrass fibrations, spectral covers and Higgs fields.";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnsupportedRegistry>(m, "UnsupportedRegistry", PyExc_ValueError);
  py::register_exception<HypothesisViolation>(m, "HypothesisViolation", PyExc_RuntimeError);
  py::register_exception<Falsification>(m, "Falsification", PyExc_AssertionError);

  m.def("poly_gcd", [](const std::string& p, const std::string& q) {
    return gcd(Poly::parse(p), Poly::parse(q)).to_string();
  }, py::arg("p"), py::arg("q"));
  m.def("resultant", [](const std::string& p, const std::string& q, const std::string& var) {
    return resultant(Poly::parse(p), Poly::parse(q), parse_var(var)).to_string();
  }, py::arg("p"), py::arg("q"), py::arg("var"));
  m.def("squarefree_part", [](const std::string& p) { return squarefree_part(Poly::parse(p)).to_string(); });

  m.def("hitchin_dim", &hitchin_dim, py::arg("g"), py::arg("r"));
  m.def("lambda_degrees", [](int r, int d, int e, int g) {
    const LambdaDegrees l = lambda_degrees(r, d, e, g);
    return std::make_pair(l.degrees, l.all_negative);
  }, py::arg("r"), py::arg("d"), py::arg("e"), py::arg("g"));
  m.def("scalar_only", [](int r, int d, int e, int g, const std::string& reduced, const std::string& integral,
                          const std::string& regular) {
    return dump(class_verdict_to_json(scalar_only(r, d, e, g, verdict_from_string(reduced),
                                                  verdict_from_string(integral), verdict_from_string(regular))));
  }, py::arg("r"), py::arg("d"), py::arg("e"), py::arg("g"), py::arg("reduced") = "unknown",
        py::arg("integral") = "unknown", py::arg("regular") = "unknown");
  m.def("discriminant_numbers", [](int r, long long c1_sq, long long c2) {
    BundleNumerics b;
    b.r = r;
    b.c1_sq = c1_sq;
    b.c2 = c2;
    b.vertical_det = c1_sq == 0;
    const DiscriminantNumbers n = discriminant_numbers(b);
    return std::make_pair(n.delta, n.bogomolov);
  }, py::arg("r"), py::arg("c1_sq"), py::arg("c2"));
  m.def("end_twist_ranks", [](const std::string& kind, int r, int l_deg) {
    const EndTwistRanks k = rank_pushforward_end_twists(fiber_desc(kind, r, l_deg));
    return std::make_pair(k.rank_vertical, k.rank_full);
  }, py::arg("kind"), py::arg("r") = 2, py::arg("l_deg") = 1);
  m.def("monomial_count_p1", &monomial_count_p1, py::arg("r"), py::arg("d"), py::arg("e"));
  m.def("spectral_genus", &spectral_genus, py::arg("r"), py::arg("d"), py::arg("e"), py::arg("g"));

  m.def("_model", [](const std::string& text) { return dump(model_to_json(model_from_json(Json::parse(text)))); });
  m.def("_spectral_certificates", [](const std::string& model_text, const std::string& spectral_text,
                                     std::uint64_t seed, int trials) {
    const WeierstrassModel model = model_from_json(Json::parse(model_text));
    const SpectralData sd = spectral_from_json(Json::parse(spectral_text));
    const CurveCertificate red = reducedness_test(model, sd, {trials, seed});
    const CurveCertificate smo = smoothness_test(model, sd, seed);
    const CurveCertificate con = connectedness_certificate(sd.r, model.d, sd.e, model.g);
    const CurveCertificate itg = integrality_test(model, sd, red, smo, con);
    return dump({{"reduced", certificate_to_json(red)},
                 {"smooth", certificate_to_json(smo)},
                 {"connected", certificate_to_json(con)},
                 {"integral", certificate_to_json(itg)}});
  }, py::arg("model"), py::arg("spectral"), py::arg("seed") = 0, py::arg("trials") = 16);
  m.def("_symkernel", [](const std::string& f, const std::string& g, int r, int samples, std::uint64_t seed) {
    const SymPresentation p = delta_matrix(Poly::parse(f), Poly::parse(g), r);
    const PolyVector solved = kernel_solver(p);
    const TorsionFreeReport rep = torsion_free_witness(p, samples, seed);
    return dump({{"kernel", poly_vector_to_json(solved)},
                 {"associates", associates(kernel_generator(p), solved)},
                 {"witness_passed", rep.passed}});
  }, py::arg("f"), py::arg("g"), py::arg("r"), py::arg("samples") = 20, py::arg("seed") = 0);
  m.def("_run", &run_command, py::arg("command"), py::arg("options"));
}
