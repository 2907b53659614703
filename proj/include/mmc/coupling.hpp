#pragma once

#include <cmath>
#include <stdexcept>

#include "mmc/constants.hpp"
#include "mmc/domain.hpp"

namespace mmc {

// Flux-tunable circuit built from two identical junctions; energies in
// joules, frequencies angular.
struct CircuitSpec {
  double E_J1;      // single junction energy [J]
  double E_C;       // charging energy [J]
  double flux_bias; // external flux in units of Phi0, |f| < 1/2
  double Q;         // resonator quality factor

  void check() const {
    if (!(E_J1 > 0.0) || !(E_C > 0.0))
      throw std::domain_error("CircuitSpec: require E_J1 > 0 and E_C > 0");
    if (!(std::abs(flux_bias) < 0.5))
      throw std::domain_error("CircuitSpec: require |flux_bias| < 1/2");
    if (!(Q > 0.0)) throw std::domain_error("CircuitSpec: require Q > 0");
  }

  // Zero-bias plasma frequency, defined with the single-junction energy.
  double omega0() const { return std::sqrt(8.0 * E_J1 * E_C) / hbar; }

  double ej0_over_ec() const { return 2.0 * E_J1 / E_C; }

  double ej_ratio_at_bias() const {
    return ej0_over_ec() * std::cos(pi * flux_bias);
  }
};

// Build a spec from a target zero-bias frequency (angular) and the ratio
// r = E_J(0)/E_C.
inline CircuitSpec circuit_from_omega0(double omega0, double r,
                                       double flux_bias, double Q) {
  if (!(omega0 > 0.0) || !(r > 0.0))
    throw std::domain_error("circuit_from_omega0: require omega0, r > 0");
  const double E_C = hbar * omega0 / (2.0 * std::sqrt(r));
  CircuitSpec cs{0.5 * r * E_C, E_C, flux_bias, Q};
  cs.check();
  return cs;
}

// Flux-dependent transition frequency (angular), including the charging
// correction. Valid on the branch cos(pi f) > 0.
inline double transmon_frequency(const CircuitSpec& cs, double f) {
  const double c = std::cos(pi * f);
  if (!(c > 0.0))
    throw std::domain_error("transmon_frequency: require cos(pi f) > 0");
  return (std::sqrt(16.0 * cs.E_J1 * c * cs.E_C) - cs.E_C) / hbar;
}

// Dimensionless flux sensitivity phi(f) = pi sin(pi f)/sqrt(2 cos(pi f)).
inline double phi_sensitivity(double f) {
  const double c = std::cos(pi * f);
  if (!(c > 0.0))
    throw std::domain_error("phi_sensitivity: require cos(pi f) > 0");
  return pi * std::sin(pi * f) / std::sqrt(2.0 * c);
}

// Slope of the frequency with external flux: d omega/d Phi = -(omega0/Phi0) phi.
inline double freq_flux_slope(const CircuitSpec& cs) {
  return -(cs.omega0() / Phi0) * phi_sensitivity(cs.flux_bias);
}

// Single-photon coupling g0 = phi * omega0 * eta (angular).
inline double single_photon_coupling(const CircuitSpec& cs, double eta) {
  return phi_sensitivity(cs.flux_bias) * cs.omega0() * eta;
}

inline double resonator_kappa(const CircuitSpec& cs) {
  return cs.omega0() / cs.Q;
}

inline double coupling_ratio(const CircuitSpec& cs, double eta) {
  return single_photon_coupling(cs, eta) / resonator_kappa(cs);
}

// Thermal decoherence rate Gamma = gamma * k_B T / (hbar * Omega_eff). The
// occupation denominator is selectable: Cyclic divides the angular mechanical
// frequency by 2 pi (the convention the headline rates follow), Angular uses
// it as is.
enum class OmegaConvention { Cyclic, Angular };

inline const char* omega_convention_label(OmegaConvention c) {
  return c == OmegaConvention::Cyclic ? "cyclic" : "angular";
}

inline double mechanical_decoherence(const CantileverSpec& cant,
                                     OmegaConvention conv) {
  cant.check();
  const double Omega_eff =
      conv == OmegaConvention::Cyclic ? cant.Omega / (2.0 * pi) : cant.Omega;
  return cant.gamma * k_B * cant.T / (hbar * Omega_eff);
}

inline double cooperativity(double g0, double kappa, double Gamma) {
  if (!(kappa > 0.0) || !(Gamma > 0.0))
    throw std::domain_error("cooperativity: require kappa, Gamma > 0");
  return g0 * g0 / (kappa * Gamma);
}

// Assembled coupling numbers for one operating point. All rates angular.
struct CouplingReport {
  double eta_star = 0.0;
  double eta = 0.0;
  double chi = 0.0;
  double phi = 0.0;
  double omega0 = 0.0;
  double omega_at_bias = 0.0;
  double kappa = 0.0;
  double g0 = 0.0;
  double g0_over_kappa = 0.0;
  double Gamma = 0.0;
  OmegaConvention gamma_convention = OmegaConvention::Cyclic;
  double cooperativity = 0.0;
};

inline CouplingReport make_coupling_report(const CircuitSpec& cs,
                                           const CantileverSpec& cant,
                                           double eta, double eta_star,
                                           double chi_val,
                                           OmegaConvention conv) {
  cs.check();
  CouplingReport r;
  r.eta_star = eta_star;
  r.eta = eta;
  r.chi = chi_val;
  r.phi = phi_sensitivity(cs.flux_bias);
  r.omega0 = cs.omega0();
  r.omega_at_bias = transmon_frequency(cs, cs.flux_bias);
  r.kappa = resonator_kappa(cs);
  r.g0 = single_photon_coupling(cs, eta);
  r.g0_over_kappa = r.g0 / r.kappa;
  r.Gamma = mechanical_decoherence(cant, conv);
  r.gamma_convention = conv;
  r.cooperativity = cooperativity(r.g0, r.kappa, r.Gamma);
  return r;
}

} // namespace mmc
