#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "mmc/constants.hpp"
#include "mmc/domain.hpp"
#include "mmc/sources.hpp"

namespace mmc {

// Relative one-sided noise power spectral densities, assumed white over the
// band of interest. The CLI takes amplitude spectral densities and squares
// them before they reach here.
struct NoiseInputs {
  double S_I_rel = 0.0; // (delta I/I)^2 per Hz
  double S_B_rel = 0.0; // (delta B/B)^2 per Hz

  void check() const {
    if (!(S_I_rel >= 0.0) || !(S_B_rel >= 0.0))
      throw std::domain_error("NoiseInputs: require S >= 0");
  }
};

// Geometric log factor entering the current-noise amplification, in the
// mirror-pair form with the doubled wire offsets. Zero when the coil width
// vanishes; positive for any finite coil.
inline double zeta_factor(const CoilSpec& coil, double z_w) {
  if (!(z_w > 0.0)) throw std::domain_error("zeta_factor: require z_w > 0");
  const double num = (coil.w_c + 4.0 * z_w) * (coil.w_c + 4.0 * z_w) +
                     4.0 * (coil.z_c + z_w) * (coil.z_c + z_w);
  const double den = (coil.w_c - 4.0 * z_w) * (coil.w_c - 4.0 * z_w) +
                     4.0 * (coil.z_c + z_w) * (coil.z_c + z_w);
  if (!(num > 0.0) || !(den > 0.0))
    throw std::domain_error("zeta_factor: degenerate geometry");
  return std::log(num / den);
}

// Field-consistent variant derived from the coil flux of the wire pair
// itself; related to the form above by halving the offsets,
// zeta_factor(z_w) = zeta_field_factor(2 z_w).
inline double zeta_field_factor(const CoilSpec& coil, double z_w) {
  if (!(z_w > 0.0))
    throw std::domain_error("zeta_field_factor: require z_w > 0");
  const double num = (coil.w_c + 2.0 * z_w) * (coil.w_c + 2.0 * z_w) +
                     (2.0 * coil.z_c + z_w) * (2.0 * coil.z_c + z_w);
  const double den = (coil.w_c - 2.0 * z_w) * (coil.w_c - 2.0 * z_w) +
                     (2.0 * coil.z_c + z_w) * (2.0 * coil.z_c + z_w);
  if (!(num > 0.0) || !(den > 0.0))
    throw std::domain_error("zeta_field_factor: degenerate geometry");
  return std::log(num / den);
}

// Two bookkeeping conventions for how the strip's screening enters the
// coil-flux noise transfer: Screened subtracts the expelled-flux term from
// the direct pickup (the physical net transfer, validated against a direct
// flux-derivative oracle); Additive adds the magnitudes as independent
// contributions (the conservative envelope the headline estimates quote).
enum class AmpConvention { Screened, Additive };

struct NoiseAmplification {
  double a_I = 0.0; // dimensionless amplification of relative current noise
  double a_B = 0.0; // dimensionless amplification of relative bias noise
};

inline NoiseAmplification noise_amplification(const CoilSpec& coil,
                                              const StripSpec& strip,
                                              double chi_val, double B_b,
                                              double z_w,
                                              AmpConvention conv) {
  coil.check();
  if (!(B_b > 0.0) || !(z_w > 0.0))
    throw std::domain_error("noise_amplification: require B_b, z_w > 0");
  NoiseAmplification out;
  const double cI = B_b * coil.L_c * z_w / Phi0;
  const double cB = B_b * coil.L_c * coil.w_c / Phi0;
  if (conv == AmpConvention::Additive) {
    out.a_I = cI * (5.0 * zeta_factor(coil, z_w) / 8.0 +
                    chi_val * strip.w / z_w);
    out.a_B = cB * (1.0 + chi_val * strip.w / coil.w_c);
  } else {
    out.a_I = cI * (5.0 * zeta_field_factor(coil, z_w) / 8.0 -
                    chi_val * strip.w / z_w);
    out.a_B = cB * (1.0 - chi_val * strip.w / coil.w_c);
  }
  return out;
}

// Relative flux noise PSD at the circuit, S_Phi/Phi0^2 per Hz.
inline double flux_noise_psd(const NoiseAmplification& amp,
                             const NoiseInputs& in) {
  in.check();
  return amp.a_I * amp.a_I * in.S_I_rel + amp.a_B * amp.a_B * in.S_B_rel;
}

// Magnetic contribution to the mechanical resonance (angular) from the
// gradient pulling on the screening currents.
inline double magnetic_spring(double b, const StripSpec& strip, double M) {
  if (!(M > 0.0)) throw std::domain_error("magnetic_spring: require M > 0");
  return (std::abs(b) * strip.w / 2.0) *
         std::sqrt(pi * strip.L / (mu0 * M));
}

// Restoring force per unit length at displacement z_m.
inline double spring_force_per_length(double b, double w, double z_m) {
  return -(pi * b * b / mu0) * (0.5 * w) * (0.5 * w) * z_m;
}

// Two-phonon heating rate (angular) from white relative current noise
// sampled at 2 Omega: R = pi Omega^2 S_I(2 Omega) / (4 I_w^2), with the
// relative PSD absorbing the I_w^2.
inline double heating_rate(const NoiseInputs& in, double Omega) {
  in.check();
  if (!(Omega > 0.0)) throw std::domain_error("heating_rate: require Omega > 0");
  return pi * Omega * Omega * in.S_I_rel / 4.0;
}

// Fraction of trapped flux released by a relative current excursion x:
// linearized and exact forms.
inline double trap_fraction_linear(double x) { return 2.0 * x; }
inline double trap_fraction_exact(double x) { return (2.0 + x) * x; }

// Assembled noise numbers for one operating point. The amplification block
// is only present when the source is a physical wire pair.
struct NoiseReport {
  bool has_wire = false;
  double zeta = 0.0;       // doubled-offset log form
  double zeta_field = 0.0; // field-consistent log form
  NoiseAmplification screened;
  NoiseAmplification additive;
  double S_Phi_rel = 0.0; // from the screened pair [1/Hz]
  double Omega_m = 0.0;   // [rad/s]
  double R_02 = 0.0;      // [rad/s]
};

inline NoiseReport make_noise_report(const CoilSpec& coil,
                                     const StripSpec& strip, double chi_val,
                                     const std::optional<WirePairSpec>& wire,
                                     const NoiseInputs& in, double M, double b,
                                     double Omega) {
  NoiseReport r;
  if (wire) {
    wire->check();
    r.has_wire = true;
    r.zeta = zeta_factor(coil, wire->z_w);
    r.zeta_field = zeta_field_factor(coil, wire->z_w);
    r.screened = noise_amplification(coil, strip, chi_val, wire->bias_field(),
                                     wire->z_w, AmpConvention::Screened);
    r.additive = noise_amplification(coil, strip, chi_val, wire->bias_field(),
                                     wire->z_w, AmpConvention::Additive);
    r.S_Phi_rel = flux_noise_psd(r.screened, in);
  }
  r.Omega_m = magnetic_spring(b, strip, M);
  r.R_02 = heating_rate(in, Omega);
  return r;
}

} // namespace mmc
