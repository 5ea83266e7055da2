#include "susyd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "susyd/solver.hpp"

namespace susyd::cli {

namespace {

using nlohmann::json;

double active_strength(const RunConfig& cfg) {
  if (cfg.strength_v0) return *cfg.strength_v0;
  return deuteron::calibrate(cfg.binding_energy_mev, cfg.alpha_fm).v0;
}

// Inverse calibration: pick the binding energy so that E_2(V0) matches it.
deuteron::DeuteronCalibration calibration_from_strength(double v0,
                                                        double alpha_fm) {
  if (!(v0 > 4.0 && v0 < 9.0))
    throw std::domain_error(
        "strength V0 = " + std::to_string(v0) +
        " outside the two-level domain (4, 9)");
  const double k_d = (v0 - 4.0) / 4.0;
  const double scale = deuteron::energy_scale(alpha_fm);
  return deuteron::calibrate(-k_d * k_d * scale, alpha_fm);
}

CheckRecord make_record(std::string name, double analytic, double oracle,
                        double tolerance, bool relative, std::string note) {
  CheckRecord rec;
  rec.name = std::move(name);
  rec.analytic = analytic;
  rec.oracle = oracle;
  rec.abs_err = std::abs(analytic - oracle);
  const double scale = std::max({std::abs(analytic), std::abs(oracle), 1e-300});
  rec.rel_err = rec.abs_err / scale;
  rec.tolerance = tolerance;
  rec.passed = (relative ? rec.rel_err : rec.abs_err) <= tolerance;
  rec.note = std::move(note);
  return rec;
}

solver::RadialProblem radial_problem(std::function<double(double)> potential,
                                     double origin_exponent, double e_hi,
                                     int grid_points) {
  solver::RadialProblem problem;
  problem.potential = std::move(potential);
  problem.origin_exponent = origin_exponent;
  problem.x_min = 1e-4;
  problem.x_max = solver::recommended_x_max(e_hi);
  problem.grid_points = grid_points;
  return problem;
}

double origin_slope(const std::function<double(double)>& f) {
  // log-log fit on x in [1e-3, 1e-2]
  constexpr int kPoints = 50;
  std::vector<double> lx(kPoints), ly(kPoints);
  for (int i = 0; i < kPoints; ++i) {
    const double x =
        1e-3 * std::pow(10.0, static_cast<double>(i) / (kPoints - 1));
    lx[i] = std::log(x);
    ly[i] = std::log(std::abs(f(x)));
  }
  return fit_line(lx, ly).slope;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::ios_base::failure("cannot open " + path.string() +
                                 " for writing");
  out << body;
  out.flush();
  if (!out) throw std::ios_base::failure("write failed for " + path.string());
}

json config_json(const RunConfig& cfg) {
  json j;
  j["binding_energy_mev"] = cfg.binding_energy_mev;
  j["alpha_fm"] = cfg.alpha_fm;
  if (cfg.strength_v0)
    j["strength_v0"] = *cfg.strength_v0;
  else
    j["strength_v0"] = nullptr;
  j["grid_points"] = cfg.grid_points;
  j["format"] = cfg.format;
  j["out"] = cfg.out_dir.string();
  return j;
}

}  // namespace

deuteron::DeuteronCalibration run_calibrate(const RunConfig& cfg) {
  if (cfg.strength_v0)
    return calibration_from_strength(*cfg.strength_v0, cfg.alpha_fm);
  return deuteron::calibrate(cfg.binding_energy_mev, cfg.alpha_fm);
}

VerificationReport run_verify(const RunConfig& cfg) {
  VerificationReport report;
  auto add = [&report](CheckRecord rec) {
    report.checks.push_back(std::move(rec));
  };

  const double v0 = active_strength(cfg);
  const auto spectrum = hulthen::analytic_spectrum(v0);
  const int count = static_cast<int>(spectrum.levels.size());

  const double e_hi = -1e-6;
  const double e_lo =
      count > 0 ? 1.5 * spectrum.levels.front().energy : -16.0;

  // Hulthen well vs oracle.
  const hulthen::HulthenPotential pot(v0);
  const auto hulthen_problem = radial_problem(
      [pot](double x) { return pot.value(x); }, 1.0, e_hi, cfg.grid_points);
  const auto oracle = solver::solve_bound_states(
      hulthen_problem, e_lo, e_hi, std::max(count, 1));
  add(make_record("hulthen_level_count", count,
                  static_cast<double>(oracle.levels.size()), 0.0, false,
                  "bound states in the window"));
  for (int i = 0; i < count && i < static_cast<int>(oracle.levels.size());
       ++i) {
    add(make_record("hulthen_E" + std::to_string(i + 1),
                    spectrum.levels[i].energy, oracle.levels[i].energy, 1e-6,
                    true, "relative"));
    add(make_record("hulthen_nodes_L" + std::to_string(i + 1),
                    spectrum.levels[i].n - 1,
                    static_cast<double>(oracle.levels[i].nodes), 0.0, false,
                    "node-count theorem"));
  }
  for (const std::string& note : oracle.diagnostics)
    add(make_record("hulthen_oracle_diagnostic", 0.0, 1.0, 0.0, false, note));

  if (count >= 1) {
    // Annihilation of the ground state by A at kappa = k_1.
    const hulthen::BoundState psi1(v0, 1);
    const auto w = susy::superpotential_from_strength(v0);
    const auto a_psi1 = susy::apply_A(w, psi1.wavefunction());
    const double x_max = std::max(30.0, 30.0 / psi1.k());
    const double num = integrate_simpson(
        [&a_psi1](double x) {
          const double v = a_psi1.value(x);
          return v * v;
        },
        0.0, x_max, 200'000);
    const double den = integrate_simpson(
        [&psi1](double x) {
          const double v = psi1.psi(x);
          return v * v;
        },
        0.0, x_max, 200'000);
    add(make_record("annihilation_ratio", 0.0, std::sqrt(num / den), 1e-8,
                    false, "||A psi_1|| / ||psi_1||"));

    // Riccati residual over the grid of record.
    const Grid record_grid{1e-3, 30.0, cfg.grid_points};
    double max_residual = 0.0;
    for (int i = 0; i < record_grid.points; ++i)
      max_residual = std::max(
          max_residual,
          std::abs(susy::riccati_residual(w, pot, record_grid.x(i))));
    add(make_record("riccati_max_residual", 0.0, max_residual, 1e-9, false,
                    "max over x in [1e-3, 30]"));

    // Ground state behaves as x near the origin.
    add(make_record("ground_origin_slope", 1.0,
                    origin_slope([&psi1](double x) { return psi1.psi(x); }),
                    0.05, false, "log-log fit on [1e-3, 1e-2]"));

    // Oracle convergence order on E_1 under grid refinement x2.
    const double e1_exact = spectrum.levels.front().energy;
    auto energy_at = [&](int pts) {
      auto problem = radial_problem([pot](double x) { return pot.value(x); },
                                    1.0, 0.5 * e1_exact, pts);
      const auto s =
          solver::solve_bound_states(problem, 1.5 * e1_exact, 0.5 * e1_exact, 1);
      return s.levels.empty() ? std::nan("") : s.levels.front().energy;
    };
    const int coarse = std::max(1000, std::min(cfg.grid_points, 2000));
    const double err_c = std::abs(energy_at(coarse) - e1_exact);
    const double err_f = std::abs(energy_at(2 * coarse) - e1_exact);
    const double order =
        err_f > 0.0 ? std::log2(err_c / err_f) : std::numeric_limits<double>::infinity();
    CheckRecord rec = make_record("oracle_convergence_order", 3.5, order, 0.0,
                                  false, "pass iff observed order >= 3.5");
    rec.passed = order >= 3.5;
    add(std::move(rec));
  }

  if (count >= 2) {
    const auto w = susy::superpotential_from_strength(v0);
    const hulthen::BoundState psi2(v0, 2);
    const Grid record_grid{1e-3, 30.0, cfg.grid_points};
    add(make_record(
        "intertwining_residual_psi2", 0.0,
        susy::intertwining_residual(w, pot, psi2.wavefunction(), record_grid),
        1e-6, false, "||(H~A - AH) psi_2|| / ||psi_2||"));
  }

  if (v0 > 4.0 && v0 < 9.0) {
    // Partner well: exactly one level, pinned at E_2 of the input well.
    const double e2_exact = spectrum.levels[1].energy;
    const susy::PartnerPotential partner((v0 - 1.0) / 2.0);
    const auto partner_problem = radial_problem(
        [partner](double x) { return partner.value(x); }, 2.0, e_hi,
        cfg.grid_points);
    const auto partner_oracle =
        solver::solve_bound_states(partner_problem, e_lo, e_hi, 2);
    add(make_record("partner_level_count", 1.0,
                    static_cast<double>(partner_oracle.levels.size()), 0.0,
                    false, "single bound state"));
    if (!partner_oracle.levels.empty()) {
      add(make_record("partner_E", e2_exact,
                      partner_oracle.levels.front().energy, 1e-5, false,
                      "absolute, dimensionless"));
      add(make_record("partner_nodes", 0.0,
                      static_cast<double>(partner_oracle.levels.front().nodes),
                      0.0, false, "nodeless ground state"));
    }
    const auto partner_state = susy::partner_state(v0);
    add(make_record("partner_origin_slope", 2.0,
                    origin_slope(partner_state.wavefunction.value), 0.05,
                    false, "log-log fit on [1e-3, 1e-2]"));
  }

  report.passed = true;
  for (const CheckRecord& rec : report.checks)
    report.passed = report.passed && rec.passed;
  return report;
}

PartnerSummary run_partner(const RunConfig& cfg) {
  const auto cal = run_calibrate(cfg);
  const auto w = susy::superpotential_from_strength(cal.v0);
  const auto state = susy::partner_state(cal.v0);
  PartnerSummary summary;
  summary.kappa = w.kappa();
  summary.factorization_energy = w.factorization_energy();
  summary.strength = 1.0 + 2.0 * w.kappa();
  summary.energy = state.energy;
  summary.energy_mev = state.energy * cal.energy_scale_mev;
  summary.analytic_norm = state.analytic_norm;
  summary.classification =
      susy::classify_susy(cal.v0, w.factorization_energy());
  return summary;
}

std::string format_double(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

namespace {

std::string figure1_gnuplot(const deuteron::DeuteronCalibration& cal) {
  std::ostringstream gp;
  gp << "# susy partner potentials in physical units\n"
     << "set datafile separator comma\n"
     << "set key top right\n"
     << "set xlabel \"r [fm]\"\n"
     << "set ylabel \"V [MeV]\"\n"
     << "set xrange [0:" << format_double(cal.alpha_fm * 8.0) << "]\n"
     << "set yrange [-35:40]\n"
     << "e_d = " << format_double(cal.binding_energy_mev) << "\n"
     << "plot \"figure1.csv\" skip 1 using 1:2 with lines title \"V (input well)\", \\\n"
     << "     \"figure1.csv\" skip 1 using 1:3 with lines title \"V-tilde (hard core)\", \\\n"
     << "     \"figure1.csv\" skip 1 using 1:4 with lines title \"V_H (no core)\", \\\n"
     << "     e_d with lines dashtype 2 title \"E_d\"\n";
  return gp.str();
}

std::string figure2_gnuplot() {
  std::ostringstream gp;
  gp << "# ground-state probability densities, no core vs hard core\n"
     << "set datafile separator comma\n"
     << "set key top right\n"
     << "set xlabel \"x = r / alpha\"\n"
     << "set ylabel \"probability density\"\n"
     << "plot \"figure2.csv\" skip 1 using 1:2 with lines title \"|psi_H|^2 (no core)\", \\\n"
     << "     \"figure2.csv\" skip 1 using 1:3 with lines title \"|psi-tilde|^2 (hard core)\"\n";
  return gp.str();
}

}  // namespace

FigureFiles run_figures(const RunConfig& cfg) {
  const auto cal = run_calibrate(cfg);
  const auto xs = deuteron::figure_grid();
  const auto f1 = deuteron::figure1_data(cal, xs);
  const auto f2 = deuteron::figure2_data(cal, xs);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  if (ec)
    throw std::ios_base::failure("cannot create " + cfg.out_dir.string() +
                                 ": " + ec.message());

  std::ostringstream csv1;
  csv1 << "r_fm,v_mev,partner_mev,nocore_mev\n";
  for (const auto& row : f1)
    csv1 << format_double(row.r_fm) << ',' << format_double(row.v_mev) << ','
         << format_double(row.partner_mev) << ','
         << format_double(row.nocore_mev) << '\n';

  std::ostringstream csv2;
  csv2 << "x,density_nocore,density_partner\n";
  for (const auto& row : f2)
    csv2 << format_double(row.x) << ',' << format_double(row.density_nocore)
         << ',' << format_double(row.density_partner) << '\n';

  FigureFiles files;
  files.figure1_csv = cfg.out_dir / "figure1.csv";
  files.figure1_gp = cfg.out_dir / "figure1.gp";
  files.figure2_csv = cfg.out_dir / "figure2.csv";
  files.figure2_gp = cfg.out_dir / "figure2.gp";
  write_file(files.figure1_csv, csv1.str());
  write_file(files.figure2_csv, csv2.str());
  write_file(files.figure1_gp, figure1_gnuplot(cal));
  write_file(files.figure2_gp, figure2_gnuplot());
  return files;
}

std::string calibration_json(const RunConfig& cfg,
                             const deuteron::DeuteronCalibration& cal) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_json(cfg);
  j["binding_energy_mev"] = cal.binding_energy_mev;
  j["alpha_fm"] = cal.alpha_fm;
  j["energy_scale_mev"] = cal.energy_scale_mev;
  j["e_d"] = cal.e_d;
  j["k_d"] = cal.k_d;
  j["k_1"] = cal.k_1;
  j["v0"] = cal.v0;
  j["strength_mev"] = cal.strength_mev;
  j["nocore_v0"] = cal.nocore_v0;
  j["nocore_strength_mev"] = cal.nocore_strength_mev;
  return j.dump(2) + "\n";
}

std::string calibration_csv(const deuteron::DeuteronCalibration& cal) {
  std::ostringstream csv;
  csv << "alpha_fm,binding_energy_mev,energy_scale_mev,e_d,k_d,k_1,v0,"
         "strength_mev,nocore_v0,nocore_strength_mev\n";
  csv << format_double(cal.alpha_fm) << ','
      << format_double(cal.binding_energy_mev) << ','
      << format_double(cal.energy_scale_mev) << ',' << format_double(cal.e_d)
      << ',' << format_double(cal.k_d) << ',' << format_double(cal.k_1) << ','
      << format_double(cal.v0) << ',' << format_double(cal.strength_mev) << ','
      << format_double(cal.nocore_v0) << ','
      << format_double(cal.nocore_strength_mev) << '\n';
  return csv.str();
}

std::string spectrum_json(const RunConfig& cfg, const hulthen::Spectrum& spectrum,
                          double energy_scale_mev) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_json(cfg);
  j["provenance"] =
      spectrum.provenance == hulthen::Provenance::analytic ? "analytic"
                                                       : "numerical-oracle";
  j["levels"] = json::array();
  for (const auto& level : spectrum.levels) {
    json l;
    l["n"] = level.n;
    l["k"] = level.k;
    l["energy"] = level.energy;
    l["energy_mev"] = level.energy * energy_scale_mev;
    j["levels"].push_back(l);
  }
  return j.dump(2) + "\n";
}

std::string spectrum_csv(const hulthen::Spectrum& spectrum,
                         double energy_scale_mev) {
  std::ostringstream csv;
  csv << "n,k,energy,energy_mev,provenance\n";
  const char* provenance =
      spectrum.provenance == hulthen::Provenance::analytic ? "analytic"
                                                       : "numerical-oracle";
  for (const auto& level : spectrum.levels)
    csv << level.n << ',' << format_double(level.k) << ','
        << format_double(level.energy) << ','
        << format_double(level.energy * energy_scale_mev) << ',' << provenance
        << '\n';
  return csv.str();
}

std::string partner_json(const RunConfig& cfg, const PartnerSummary& summary) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_json(cfg);
  j["kappa"] = summary.kappa;
  j["factorization_energy"] = summary.factorization_energy;
  j["strength"] = summary.strength;
  j["energy"] = summary.energy;
  j["energy_mev"] = summary.energy_mev;
  j["analytic_norm"] = summary.analytic_norm;
  j["susy_phase"] = summary.classification.phase == susy::SusyPhase::unbroken
                        ? "unbroken"
                        : "broken";
  if (summary.classification.missing_level)
    j["missing_level"] = *summary.classification.missing_level;
  else
    j["missing_level"] = nullptr;
  return j.dump(2) + "\n";
}

std::string partner_csv(const PartnerSummary& summary) {
  std::ostringstream csv;
  csv << "kappa,factorization_energy,strength,energy,energy_mev,analytic_norm,"
         "susy_phase,missing_level\n";
  csv << format_double(summary.kappa) << ','
      << format_double(summary.factorization_energy) << ','
      << format_double(summary.strength) << ','
      << format_double(summary.energy) << ','
      << format_double(summary.energy_mev) << ','
      << format_double(summary.analytic_norm) << ','
      << (summary.classification.phase == susy::SusyPhase::unbroken
              ? "unbroken"
              : "broken")
      << ','
      << (summary.classification.missing_level
              ? std::to_string(*summary.classification.missing_level)
              : std::string("none"))
      << '\n';
  return csv.str();
}

std::string report_json(const RunConfig& cfg,
                        const VerificationReport& report) {
  json j;
  j["schema_version"] = kReportSchemaVersion;
  j["config"] = config_json(cfg);
  j["checks"] = json::array();
  for (const auto& rec : report.checks) {
    json c;
    c["name"] = rec.name;
    c["analytic"] = rec.analytic;
    c["oracle"] = rec.oracle;
    c["abs_err"] = rec.abs_err;
    c["rel_err"] = rec.rel_err;
    c["tolerance"] = rec.tolerance;
    c["passed"] = rec.passed;
    c["note"] = rec.note;
    j["checks"].push_back(c);
  }
  j["passed"] = report.passed;
  return j.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report) {
  std::ostringstream csv;
  csv << "name,analytic,oracle,abs_err,rel_err,tolerance,passed,note\n";
  for (const auto& rec : report.checks)
    csv << rec.name << ',' << format_double(rec.analytic) << ','
        << format_double(rec.oracle) << ',' << format_double(rec.abs_err)
        << ',' << format_double(rec.rel_err) << ','
        << format_double(rec.tolerance) << ','
        << (rec.passed ? "pass" : "fail") << ',' << rec.note << '\n';
  return csv.str();
}

}  // namespace susyd::cli
