#include "susyd/deuteron.hpp"

#include <cmath>
#include <stdexcept>

#include "susyd/hulthen.hpp"
#include "susyd/numerics.hpp"
#include "susyd/susy.hpp"

namespace susyd::deuteron {

double energy_scale(double alpha_fm, const PhysicalConstants& constants) {
  if (!(alpha_fm > 0.0))
    throw std::invalid_argument("energy_scale: requires alpha > 0");
  const double hc = constants.hbar_c_mev_fm;
  return hc * hc / (alpha_fm * alpha_fm * constants.proton_mass_mev);
}

PhysicalUnits make_units(double alpha_fm, const PhysicalConstants& constants) {
  PhysicalUnits units;
  units.alpha_fm = alpha_fm;
  units.energy_scale_mev = energy_scale(alpha_fm, constants);
  units.constants = constants;
  return units;
}

DeuteronCalibration calibrate(double e_d_mev, double alpha_fm,
                              const PhysicalConstants& constants) {
  if (!(e_d_mev < 0.0))
    throw std::invalid_argument("calibrate: requires a negative binding energy");
  DeuteronCalibration cal;
  cal.binding_energy_mev = e_d_mev;
  cal.alpha_fm = alpha_fm;
  cal.energy_scale_mev = energy_scale(alpha_fm, constants);
  cal.e_d = e_d_mev / cal.energy_scale_mev;
  cal.k_d = std::sqrt(-cal.e_d);
  cal.k_1 = (4.0 * cal.k_d + 3.0) / 2.0;
  cal.v0 = 4.0 * cal.k_d + 4.0;
  if (!(cal.v0 > 4.0 && cal.v0 < 9.0))
    throw std::domain_error(
        "calibrate: strength V0 = " + std::to_string(cal.v0) +
        " outside the two-level domain (4, 9)");
  cal.strength_mev = cal.v0 * cal.energy_scale_mev;
  cal.nocore_v0 = 2.0 * cal.k_d + 1.0;
  cal.nocore_strength_mev = cal.nocore_v0 * cal.energy_scale_mev;
  return cal;
}

std::vector<Figure1Row> figure1_data(const DeuteronCalibration& cal,
                                     const std::vector<double>& x_samples) {
  const hulthen::HulthenPotential core_input(cal.v0);
  const hulthen::HulthenPotential nocore(cal.nocore_v0);
  const susy::PartnerPotential partner((cal.v0 - 1.0) / 2.0);
  std::vector<Figure1Row> rows;
  rows.reserve(x_samples.size());
  for (double x : x_samples) {
    Figure1Row row;
    row.r_fm = cal.alpha_fm * x;
    row.v_mev = cal.energy_scale_mev * core_input.value(x);
    row.partner_mev = cal.energy_scale_mev * partner.value(x);
    row.nocore_mev = cal.energy_scale_mev * nocore.value(x);
    rows.push_back(row);
  }
  return rows;
}

std::vector<Figure2Row> figure2_data(const DeuteronCalibration& cal,
                                     const std::vector<double>& x_samples) {
  if (x_samples.size() < 3)
    throw std::invalid_argument("figure2_data: need at least 3 samples");
  const hulthen::BoundState nocore_ground(cal.nocore_v0, 1);
  const susy::PartnerState partner = susy::partner_state(cal.v0);

  std::vector<double> nocore_density(x_samples.size());
  std::vector<double> partner_density(x_samples.size());
  for (std::size_t i = 0; i < x_samples.size(); ++i) {
    const double h = nocore_ground.psi(x_samples[i]);
    const double p = partner.wavefunction.value(x_samples[i]);
    nocore_density[i] = h * h;
    partner_density[i] = p * p;
  }
  // unit integral over the emitted grid
  const double step = x_samples[1] - x_samples[0];
  const double nocore_total = integrate_simpson(nocore_density, step);
  const double partner_total = integrate_simpson(partner_density, step);

  std::vector<Figure2Row> rows;
  rows.reserve(x_samples.size());
  for (std::size_t i = 0; i < x_samples.size(); ++i) {
    Figure2Row row;
    row.x = x_samples[i];
    row.density_nocore = nocore_density[i] / nocore_total;
    row.density_partner = partner_density[i] / partner_total;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> figure_grid() {
  return Grid{0.01, 8.0, 2000}.sample();
}

}  // namespace susyd::deuteron
