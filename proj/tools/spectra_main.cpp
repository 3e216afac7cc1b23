#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "spectra/cli.hpp"
#include "spectra/errors.hpp"

int main(int argc, char** argv) {
  using spectra::Command;
  CLI::App app{"Exact invariants and Higgs-field classification for Weierstrass fibrations"};
  app.require_subcommand(1);
  app.fallthrough();

  spectra::RunConfig cfg;
  std::optional<std::uint64_t> seed;
  std::string format = "json";
  bool special_interval = false;
  std::string r_range = "2", d_range = "1", e_range = "0..5", g_range = "0";

  app.add_option("--seed", seed, "Random seed (falls back to SPECTRA_SEED)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--special-interval", special_interval,
               "Report h0 intervals for generic line bundles in the special range");

  auto* analyze = app.add_subcommand("analyze-fibration", "Validate a Weierstrass model and tabulate its invariants");
  analyze->add_option("--model", cfg.model_path, "Model JSON")->required()->check(CLI::ExistingFile);

  auto* spectral = app.add_subcommand("spectral-check", "Certify properties of an explicit spectral curve");
  spectral->add_option("--model", cfg.model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  spectral->add_option("--spectral", cfg.spectral_path, "Spectral data JSON")->required()->check(CLI::ExistingFile);
  spectral->add_option("--trials", cfg.trials, "Specialization trials")->check(CLI::PositiveNumber);

  auto* classify = app.add_subcommand("higgs-classify", "Classify the Higgs fields of a described bundle");
  classify->add_option("--model", cfg.model_path, "Model JSON")->required()->check(CLI::ExistingFile);
  classify->add_option("--bundle", cfg.bundle_path, "Bundle JSON")->required()->check(CLI::ExistingFile);
  classify->add_option("--spectral", cfg.spectral_path, "Spectral data JSON")->check(CLI::ExistingFile);
  classify->add_option("--fiber-type", cfg.fiber_type, "Restriction to a general fiber")
      ->check(CLI::IsMember({"distinct", "atiyah", "split_pair"}));
  classify->add_option("--trials", cfg.trials, "Specialization trials")->check(CLI::PositiveNumber);

  auto* hitchin = app.add_subcommand("hitchin-dim", "Dimension of the Hitchin base");
  hitchin->add_option("--g", cfg.g, "Genus of the base curve")->required()->check(CLI::NonNegativeNumber);
  hitchin->add_option("--r", cfg.r, "Rank")->required()->check(CLI::PositiveNumber);

  auto* symk = app.add_subcommand("symkernel-verify", "Verify the kernel of the symmetric-power presentation");
  symk->add_option("--f", cfg.f_expr, "First generator")->required();
  symk->add_option("--g", cfg.g_expr, "Second generator")->required();
  symk->add_option("--r", cfg.r, "Symmetric power")->required();
  symk->add_option("--samples", cfg.samples, "Witness samples")->check(CLI::NonNegativeNumber);

  auto* sweep = app.add_subcommand("sweep", "Verdict table over a parameter lattice");
  sweep->add_option("--r", r_range, "Rank range a..b");
  sweep->add_option("--d", d_range, "Range of deg L");
  sweep->add_option("--e", e_range, "Range of c2");
  sweep->add_option("--g", g_range, "Genus range");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the malformed-input exit code.
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*analyze) cfg.command = Command::analyze_fibration;
    if (*spectral) cfg.command = Command::spectral_check;
    if (*classify) cfg.command = Command::higgs_classify;
    if (*hitchin) cfg.command = Command::hitchin_dim;
    if (*symk) cfg.command = Command::symkernel_verify;
    if (*sweep) {
      cfg.command = Command::sweep;
      cfg.sweep_r = spectra::parse_range(r_range);
      cfg.sweep_d = spectra::parse_range(d_range);
      cfg.sweep_e = spectra::parse_range(e_range);
      cfg.sweep_g = spectra::parse_range(g_range);
    }
    cfg.seed = spectra::resolve_seed(seed);
  } catch (const spectra::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  cfg.general_position = !special_interval;
  cfg.output = format == "text" ? spectra::OutputFormat::text : spectra::OutputFormat::json;

  const spectra::RunResult res = spectra::run(cfg);
  std::cout << res.rendered;
  if (res.exit_code != 0 && res.report.contains("error")) {
    std::cerr << "error: " << res.report["error"]["message"].get<std::string>() << '\n';
  }
  return res.exit_code;
}
