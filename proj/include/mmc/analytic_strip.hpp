#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mmc/constants.hpp"
#include "mmc/domain.hpp"
#include "mmc/util.hpp"

namespace mmc {

// Point in the transverse cross-section plane (x integrated out).
struct FieldPoint {
  double y; // transverse coordinate [m]
  double z; // vertical coordinate [m]
};

enum class Mode { Quadrupole, Homogeneous };

// Applied-field state of the strip. In quadrupole mode `amplitude` is the
// gradient b [T/m] and the out-of-plane field at the displaced strip is
// b*z_m; in homogeneous mode `amplitude` is B_a [T] directly and z_m only
// shifts the cross-section geometrically.
struct StripState {
  double z_m;       // strip vertical displacement [m]
  double amplitude; // b [T/m] (quadrupole) or B_a [T] (homogeneous)
  Mode mode = Mode::Quadrupole;

  // Out-of-plane applied field seen by the strip plane.
  double drive_field() const {
    return mode == Mode::Quadrupole ? amplitude * z_m : amplitude;
  }
};

// Meissner sheet current of the infinite thin strip: odd in y, inverse-
// square-root divergent at the edges (integrable).
inline double sheet_current(double y, const StripState& st,
                            const StripSpec& strip) {
  const double a = 0.5 * strip.w;
  if (!(std::abs(y) < a))
    throw std::domain_error("sheet_current: require |y| < w/2");
  const double Ba = st.drive_field();
  return (Ba / mu0) * 2.0 * y / std::sqrt(a * a - y * y);
}

// Closed-form vector potential A_x of the screening currents. Principal
// complex square-root branch with the explicit sign factor y/|y|; the odd
// function is continued by A_x(0, z) := 0.
inline double vector_potential(const FieldPoint& p, const StripState& st,
                               const StripSpec& strip) {
  const double a = 0.5 * strip.w;
  const double Ba = st.drive_field();
  if (p.y == 0.0) return 0.0;
  const std::complex<double> zeta(p.y, p.z - st.z_m);
  const std::complex<double> S = std::sqrt(zeta * zeta - a * a);
  const double sgn = p.y > 0.0 ? 1.0 : -1.0;
  return Ba * (p.y - sgn * S.real());
}

// Response field (B_y, B_z) from the analytic derivative of the complex
// potential (never finite differences).
struct FieldVec {
  double B_y;
  double B_z;
};

inline bool inside_strip_section(const FieldPoint& p, const StripState& st,
                                 const StripSpec& strip) {
  return std::abs(p.y) <= 0.5 * strip.w &&
         std::abs(p.z - st.z_m) <= 0.5 * strip.t;
}

inline FieldVec b_field(const FieldPoint& p, const StripState& st,
                        const StripSpec& strip) {
  if (inside_strip_section(p, st, strip))
    throw std::domain_error("b_field: point inside the strip cross-section");
  const double a = 0.5 * strip.w;
  const double Ba = st.drive_field();
  const std::complex<double> zeta(p.y, p.z - st.z_m);
  const std::complex<double> S = std::sqrt(zeta * zeta - a * a);
  const std::complex<double> q = zeta / S;
  // sgn(y)*Re(zeta/S) is even in y with a finite on-axis limit, so the axis
  // takes the +1 branch.
  const double sgn = p.y >= 0.0 ? 1.0 : -1.0;
  return {Ba * sgn * q.imag(), Ba * (sgn * q.real() - 1.0)};
}

// Applied source field of the given mode at a point (the field the strip
// responds to). Quadrupole: b*(-y, z); homogeneous: (0, B_a).
inline FieldVec applied_field(const FieldPoint& p, const StripState& st) {
  if (st.mode == Mode::Quadrupole)
    return {-st.amplitude * p.y, st.amplitude * p.z};
  return {0.0, st.amplitude};
}

// Flux threaded through the rectangular pick-up coil by the screening
// currents, from the long-leg potential difference: Phi = 2 L_c A_x(w_c/2, z_c).
inline double pickup_flux(const CoilSpec& coil, const StripState& st,
                          const StripSpec& strip) {
  if (!(coil.z_c > 0.5 * strip.t))
    throw std::domain_error("pickup_flux: coil must sit above the strip");
  return 2.0 * coil.L_c *
         vector_potential({0.5 * coil.w_c, coil.z_c}, st, strip);
}

// Geometric coupling efficiency of the coil relative to the ideal limit.
inline double chi(double wc_over_w, double zc_over_w) {
  if (!(wc_over_w > 0 && zc_over_w > 0))
    throw std::domain_error("chi: arguments must be > 0");
  const std::complex<double> zeta(wc_over_w, 2.0 * zc_over_w);
  return wc_over_w - std::sqrt(zeta * zeta - 1.0).real();
}

// Closed-form optimal coil width for a homogeneous applied field.
inline double optimal_width_homogeneous(double x) {
  return std::sqrt((3.0 + 20.0 * x * x -
                    4.0 * x * std::sqrt(3.0 + 16.0 * x * x)) /
                   3.0);
}

// Optimal coil width ratio w_c/w at a given height ratio. Quadrupole mode
// maximizes chi numerically (the maximizer coincides with the line where the
// response's out-of-plane field vanishes); homogeneous mode has a closed form.
inline double optimal_coil_width(double zc_over_w, Mode mode) {
  if (!(zc_over_w > 0))
    throw std::domain_error("optimal_coil_width: require z_c/w > 0");
  if (mode == Mode::Homogeneous) return optimal_width_homogeneous(zc_over_w);
  const double lo = 1.0, hi = 10.0 * (1.0 + zc_over_w);
  return maximize_scalar([&](double u) { return chi(u, zc_over_w); }, lo, hi,
                         1e-6);
}

// Edge-field limited maximum quadrupole gradient of the strip.
inline double gradient_limit_factor(double x) {
  return 1.0 / std::sqrt(1.0 + (std::sqrt(2.0 * x) + x) * (1.0 + x));
}

inline double max_gradient(const StripSpec& strip) {
  strip.check();
  return gradient_limit_factor(strip.t / strip.w) * 2.0 * strip.B_c / strip.w;
}

// Edge-field limited maximum homogeneous applied field.
inline double max_homogeneous_field(const StripSpec& strip) {
  strip.check();
  return std::sqrt(2.0 * strip.t / strip.w) * strip.B_c;
}

// Ideal transduction bound (coil capturing all expelled flux).
inline double eta_star(double z_zp, double b, double L_c, double w) {
  return z_zp * b * L_c * w / Phi0;
}

// Homogeneous-field transduction closed form, as a dimensionless geometry
// factor times 2 B_a L_c z_zp / Phi0.
inline double eta_homogeneous_factor(double wc_over_w, double zc_over_w) {
  const std::complex<double> zeta(wc_over_w, 2.0 * zc_over_w);
  const std::complex<double> num(-2.0 * zc_over_w, wc_over_w);
  return (num / std::sqrt(zeta * zeta - 1.0)).real();
}

// Dimensionless transduction eta = (z_zp/Phi0) dPhi/dz_m for the assembled
// system. `amplitude` is b [T/m] in quadrupole mode, B_a [T] in homogeneous
// mode.
inline double eta_value(const StripSpec& strip, const CantileverSpec& cant,
                        const CoilSpec& coil, double amplitude, Mode mode) {
  const double M = effective_mass(strip, cant);
  const double z_zp = zero_point_motion(M, cant.Omega);
  const double u = coil.w_c / strip.w;
  const double v = coil.z_c / strip.w;
  if (mode == Mode::Quadrupole)
    return eta_star(z_zp, amplitude, coil.L_c, strip.w) * chi(u, v);
  return 2.0 * amplitude * coil.L_c * z_zp / Phi0 *
         eta_homogeneous_factor(u, v);
}

// Corner-field magnitude estimates with the edge enhancement factor
// sqrt(w/2t); used by the critical-field safety predicate. At b = max
// gradient the quadrupole value equals B_c identically.
inline double corner_field_quadrupole(const StripSpec& s, double b) {
  const double enh = std::sqrt(s.w / (2.0 * s.t));
  const double By = -b * 0.5 * s.w - enh * b * 0.5 * s.t;
  const double Bz = b * 0.5 * s.t + enh * b * 0.5 * s.t;
  return std::hypot(By, Bz);
}

inline double corner_field_homogeneous(const StripSpec& s, double B_a) {
  return std::sqrt(s.w / (2.0 * s.t)) * B_a;
}

// Interpolating fit for the sheet current at finite Pearl length. The two
// shape functions blend the ideal-screening edge divergence into the weak-
// screening linear profile; at Lambda = 0 the ideal profile is recovered
// identically.
inline double h1_fit(double x) {
  return 0.25 - 0.63 * std::sqrt(x) + 1.2 * std::pow(x, 0.8);
}

inline double h2_fit(double x) { return 0.5 * pi + x; }

inline double sheet_current_finite_lambda(double y, double pearl,
                                          const StripState& st,
                                          const StripSpec& strip) {
  const double a = 0.5 * strip.w;
  if (!(std::abs(y) < a))
    throw std::domain_error("sheet_current_finite_lambda: require |y| < w/2");
  if (!(pearl >= 0.0))
    throw std::domain_error("sheet_current_finite_lambda: require Lambda >= 0");
  const double x = pearl / strip.w;
  const double Ba = st.drive_field();
  return (Ba / mu0) * y /
         std::sqrt(h1_fit(x) * (a * a - y * y) + h2_fit(x) * pearl * strip.w);
}

} // namespace mmc
