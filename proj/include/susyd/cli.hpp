// Command-level operations behind the susyd executable: calibration,
// spectra, partner summary, the analytic-vs-oracle verification battery
// and figure-data export.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "susyd/deuteron.hpp"
#include "susyd/hulthen.hpp"
#include "susyd/susy.hpp"

namespace susyd::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kDomainError = 2,
  kIoError = 3,
};

inline constexpr const char* kReportSchemaVersion = "susyd.report/1";

struct RunConfig {
  double binding_energy_mev = -2.22456614;
  double alpha_fm = 3.0;
  std::optional<double> strength_v0;  // overrides the calibrated strength
  int grid_points = 200'000;
  std::string format = "json";  // "json" | "csv"
  std::filesystem::path out_dir = ".";
};

/// Calibration for the active config: from the measured binding energy,
/// or inverted from an explicit strength override (E_d := E_2(V0)).
deuteron::DeuteronCalibration run_calibrate(const RunConfig& cfg);

struct CheckRecord {
  std::string name;
  double analytic = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckRecord> checks;
  bool passed = true;
};

/// Full analytic-vs-oracle battery at the config's strength: spectrum
/// equivalence, partner spectrum, annihilation, intertwining, Riccati,
/// node counts, near-origin exponents, grid-convergence order.
VerificationReport run_verify(const RunConfig& cfg);

struct FigureFiles {
  std::filesystem::path figure1_csv;
  std::filesystem::path figure1_gp;
  std::filesystem::path figure2_csv;
  std::filesystem::path figure2_gp;
};

/// Writes figure1.csv/.gp and figure2.csv/.gp under cfg.out_dir;
/// byte-stable for identical configs.
FigureFiles run_figures(const RunConfig& cfg);

struct PartnerSummary {
  double kappa = 0.0;
  double factorization_energy = 0.0;
  double strength = 0.0;  // 1 + 2 kappa
  double energy = 0.0;
  double energy_mev = 0.0;
  double analytic_norm = 0.0;
  susy::SusyClassification classification;
};

PartnerSummary run_partner(const RunConfig& cfg);

// Rendering. JSON documents carry {schema_version, config, ...}; CSV uses
// a header row, comma separators, 17 significant digits and LF endings.
std::string format_double(double value);
std::string calibration_json(const RunConfig& cfg,
                             const deuteron::DeuteronCalibration& cal);
std::string calibration_csv(const deuteron::DeuteronCalibration& cal);
std::string spectrum_json(const RunConfig& cfg, const hulthen::Spectrum& spectrum,
                          double energy_scale_mev);
std::string spectrum_csv(const hulthen::Spectrum& spectrum,
                         double energy_scale_mev);
std::string partner_json(const RunConfig& cfg, const PartnerSummary& summary);
std::string partner_csv(const PartnerSummary& summary);
std::string report_json(const RunConfig& cfg, const VerificationReport& report);
std::string report_csv(const VerificationReport& report);

}  // namespace susyd::cli
