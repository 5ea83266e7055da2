// Physical-units layer and the deuteron case study: calibration of the
// well strength from the measured binding energy, MeV/fm conversion and
// figure-table generation.
#pragma once

#include <vector>

namespace susyd::deuteron {

/// Named configuration values; CODATA 2018 defaults.
struct PhysicalConstants {
  double hbar_c_mev_fm = 197.3269804;
  double proton_mass_mev = 938.27208816;  // m_p c^2
};

/// Dimensionless <-> MeV conversion for range alpha, with 2 mu = m_p:
/// energy_scale = (hbar c)^2 / (alpha^2 m_p c^2).
double energy_scale(double alpha_fm, const PhysicalConstants& constants = {});

struct PhysicalUnits {
  double alpha_fm = 3.0;
  double energy_scale_mev = 0.0;
  PhysicalConstants constants;
};

PhysicalUnits make_units(double alpha_fm, const PhysicalConstants& constants = {});

struct DeuteronCalibration {
  double binding_energy_mev = 0.0;  // measured E_d, negative
  double alpha_fm = 0.0;
  double energy_scale_mev = 0.0;
  double e_d = 0.0;                 // dimensionless binding energy
  double k_d = 0.0;                 // sqrt(-E_d)
  double k_1 = 0.0;                 // (4 k_d + 3)/2
  double v0 = 0.0;                  // 4 k_d + 4, must land in (4, 9)
  double strength_mev = 0.0;        // V0 * energy_scale
  double nocore_v0 = 0.0;           // 2 k_d + 1
  double nocore_strength_mev = 0.0; // (2 k_d + 1) * energy_scale
};

/// Inverts E_2 = -((V0-4)/4)^2 so the partner's single level sits at the
/// measured binding energy. Throws std::domain_error when the resulting
/// strength leaves the two-level domain (4, 9).
DeuteronCalibration calibrate(double e_d_mev, double alpha_fm,
                              const PhysicalConstants& constants = {});

struct Figure1Row {
  double r_fm = 0.0;
  double v_mev = 0.0;        // hard-core-input Hulthen, strength V0
  double partner_mev = 0.0;  // susy partner
  double nocore_mev = 0.0;   // no-core Hulthen, strength 2 k_d + 1
};

/// Potentials in MeV versus r = alpha x in fm over the given x samples.
std::vector<Figure1Row> figure1_data(const DeuteronCalibration& cal,
                                     const std::vector<double>& x_samples);

struct Figure2Row {
  double x = 0.0;
  double density_nocore = 0.0;   // |psi_H|^2
  double density_partner = 0.0;  // |psi-tilde|^2
};

/// Ground-state probability densities, each normalized to unit integral
/// over the emitted grid.
std::vector<Figure2Row> figure2_data(const DeuteronCalibration& cal,
                                     const std::vector<double>& x_samples);

/// 2000 uniform samples on x in [0.01, 8], the plotting range.
std::vector<double> figure_grid();

}  // namespace susyd::deuteron
