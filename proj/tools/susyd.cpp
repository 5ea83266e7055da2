// susyd: calibration, spectra, partner construction, verification and
// figure export for the hard-core deuteron construction.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "susyd/cli.hpp"
#include "susyd/deuteron.hpp"
#include "susyd/hulthen.hpp"

namespace {

using susyd::cli::RunConfig;

int run_command(const std::string& command, const RunConfig& cfg) {
  using namespace susyd;

  if (command == "calibrate") {
    const auto cal = cli::run_calibrate(cfg);
    std::cout << (cfg.format == "csv" ? cli::calibration_csv(cal)
                                      : cli::calibration_json(cfg, cal));
    return cli::kOk;
  }
  if (command == "spectrum") {
    const double v0 =
        cfg.strength_v0 ? *cfg.strength_v0 : cli::run_calibrate(cfg).v0;
    const auto spectrum = hulthen::analytic_spectrum(v0);
    const double scale = deuteron::energy_scale(cfg.alpha_fm);
    std::cout << (cfg.format == "csv"
                      ? cli::spectrum_csv(spectrum, scale)
                      : cli::spectrum_json(cfg, spectrum, scale));
    return cli::kOk;
  }
  if (command == "partner") {
    const auto summary = cli::run_partner(cfg);
    std::cout << (cfg.format == "csv" ? cli::partner_csv(summary)
                                      : cli::partner_json(cfg, summary));
    return cli::kOk;
  }
  if (command == "verify") {
    const auto report = cli::run_verify(cfg);
    std::cout << (cfg.format == "csv" ? cli::report_csv(report)
                                      : cli::report_json(cfg, report));
    return report.passed ? cli::kOk : cli::kVerifyFailed;
  }
  if (command == "figures") {
    const auto files = cli::run_figures(cfg);
    std::cout << "wrote " << files.figure1_csv.string() << '\n'
              << "wrote " << files.figure1_gp.string() << '\n'
              << "wrote " << files.figure2_csv.string() << '\n'
              << "wrote " << files.figure2_gp.string() << '\n';
    return cli::kOk;
  }
  std::cerr << "unknown command: " << command << '\n';
  return cli::kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Supersymmetric construction of the hard-core deuteron bound state "
      "from the Hulthen well"};
  app.fallthrough();

  RunConfig cfg;
  std::string out_dir = ".";
  double strength_v0 = 0.0;

  app.add_option("--binding-energy-mev", cfg.binding_energy_mev,
                 "Measured binding energy in MeV (negative)")
      ->envname("SUSYD_BINDING_ENERGY_MEV")
      ->capture_default_str();
  app.add_option("--alpha-fm", cfg.alpha_fm, "Potential range alpha in fm")
      ->envname("SUSYD_ALPHA_FM")
      ->capture_default_str();
  auto* strength_opt = app.add_option(
      "--strength-v0", strength_v0,
      "Dimensionless well strength V0 (overrides calibration)");
  app.add_option("--grid-points", cfg.grid_points,
                 "Grid points for oracle solves and residual grids")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", out_dir, "Output directory for figure files")
      ->envname("SUSYD_OUT")
      ->capture_default_str();

  app.require_subcommand(1);
  for (const char* name : {"calibrate", "spectrum", "partner", "verify",
                           "figures"}) {
    auto* sub = app.add_subcommand(name);
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? susyd::cli::kOk : susyd::cli::kDomainError;
  }

  if (strength_opt->count() > 0) cfg.strength_v0 = strength_v0;
  cfg.out_dir = out_dir;

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    return run_command(command, cfg);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return susyd::cli::kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return susyd::cli::kIoError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return susyd::cli::kDomainError;
  }
}
