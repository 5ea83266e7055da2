// Factorization machinery: superpotential, Riccati check, partner
// potential, Darboux-mapped partner state, intertwining diagnostic and
// broken/unbroken classification.
#pragma once

#include <optional>

#include "susyd/hulthen.hpp"
#include "susyd/numerics.hpp"

namespace susyd::susy {

/// w(x) = kappa - 1/(e^x - 1) with factorization energy -kappa^2.
class Superpotential {
 public:
  explicit Superpotential(double kappa);

  double kappa() const { return kappa_; }
  double factorization_energy() const { return -kappa_ * kappa_; }

  double value(double x) const;
  /// Closed-form w'(x) = e^x / (e^x - 1)^2.
  double derivative(double x) const;

 private:
  double kappa_;
};

/// kappa = (V0 - 1)/2; requires V0 > 1. Forces the factorization energy
/// onto the ground level E_1 of the strength-V0 well (unbroken case).
Superpotential superpotential_from_strength(double v0);

/// -w'(x) + w(x)^2 - (V(x) - eps). Zero (to rounding) when the strength
/// matches 1 + 2 kappa; for a mismatched pair the residual equals the
/// strength perturbation divided by (e^x - 1), which makes the function
/// itself the mismatch witness.
double riccati_residual(const Superpotential& w,
                        const hulthen::HulthenPotential& pot, double x);

/// Partner well V(x) + 2 w'(x) = -(1+2k)/(e^x - 1) + 1/(2 sinh^2(x/2)):
/// repulsive 2/x^2 core, attractive tail of strength 1 + 2 kappa.
class PartnerPotential {
 public:
  explicit PartnerPotential(double kappa);

  double kappa() const { return kappa_; }
  double strength() const { return 1.0 + 2.0 * kappa_; }

  double value(double x) const;

 private:
  double kappa_;
};

PartnerPotential partner_potential(const Superpotential& w);

/// A = d/dx + w(x) applied to a sampler with analytic derivative.
/// The returned derivative uses psi'' when available, else is empty.
Wavefunction apply_A(const Superpotential& w, const Wavefunction& psi);

/// Single bound state of the partner well, built per the Darboux map
/// (E2 - E1)^{-1/2} A psi_2 and re-normalized by quadrature.
struct PartnerState {
  double energy = 0.0;         // = E_2 of the input well
  double analytic_norm = 0.0;  // norm before quadrature renormalization
  Wavefunction wavefunction;
};

/// Requires 4 < V0 < 9 (two-level configuration).
PartnerState partner_state(double v0);

/// || (H~ A - A H) phi ||_2 / || phi ||_2 on the grid interior, O(h^4)
/// stencils. phi must supply value and both derivatives; the strengths
/// must satisfy V0 = 1 + 2 kappa.
double intertwining_residual(const Superpotential& w,
                             const hulthen::HulthenPotential& pot,
                             const Wavefunction& phi, const Grid& grid);

/// A-dagger zero mode e^{kappa x} / (1 - e^{-x}); not square integrable
/// for kappa > 0 (the broken-case witness).
double partner_zero_mode(const Superpotential& w, double x);

enum class SusyPhase { unbroken, broken };

struct SusyClassification {
  SusyPhase phase = SusyPhase::broken;
  /// Level removed from the partner spectrum (unbroken case only).
  std::optional<int> missing_level;
};

/// Unbroken iff eps matches some E_n of the strength-V0 well to relative
/// 1e-12; otherwise broken (the A-dagger zero mode is never normalizable).
SusyClassification classify_susy(double v0, double eps);

}  // namespace susyd::susy
