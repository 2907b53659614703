#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "mmc/analytic_strip.hpp"
#include "mmc/constants.hpp"
#include "mmc/domain.hpp"

namespace mmc {

// Antiparallel wire pair below the strip: wires run along x at
// (y, z) = (+z_w, -z_w/2) carrying +I_w and (-z_w, -z_w/2) carrying -I_w.
// Together with a uniform compensating bias field they realize a quadrupole
// around the origin.
struct WirePairSpec {
  double I_w; // wire current [A]
  double z_w; // geometry scale [m]

  void check() const {
    if (!(I_w > 0.0) || !(z_w > 0.0))
      throw std::domain_error("WirePairSpec: require I_w > 0 and z_w > 0");
  }

  // Magnitude of the field the pair produces at the origin; the compensating
  // bias has the same magnitude and opposite sign.
  double bias_field() const { return 4.0 * mu0 * I_w / (5.0 * pi * z_w); }

  // Quadrupole gradient at the origin of the compensated field.
  double gradient() const {
    return 16.0 * mu0 * I_w / (25.0 * pi * z_w * z_w);
  }
};

// Geometry scale that realizes a requested gradient at a given current.
inline double z_w_for_gradient(double I_w, double b) {
  if (!(I_w > 0.0) || !(b > 0.0))
    throw std::domain_error("z_w_for_gradient: require I_w > 0 and b > 0");
  return std::sqrt(16.0 * mu0 * I_w / (25.0 * pi * b));
}

// Field of the two wires alone (no bias), in the dimensionless two-term form.
inline FieldVec wire_pair_field(const FieldPoint& p, const WirePairSpec& s) {
  s.check();
  const double yt = p.y / s.z_w, zt = p.z / s.z_w;
  const double c = mu0 * s.I_w / (2.0 * pi * s.z_w);
  double By = 0.0, Bz = 0.0;
  for (int j = 0; j < 2; ++j) {
    const double sj = (j == 0) ? 1.0 : -1.0; // (-1)^j
    const double dy = yt - sj;
    const double dz = zt + 0.5;
    const double D = dy * dy + dz * dz;
    if (D == 0.0)
      throw std::domain_error("wire_pair_field: point on a wire");
    By += sj * (-dz) / D;
    Bz += sj * dy / D;
  }
  return {c * By, c * Bz};
}

// Compensated applied field: wires plus the uniform bias, exactly zero at the
// origin and locally quadrupolar there.
inline FieldVec wire_applied_field(const FieldPoint& p, const WirePairSpec& s) {
  FieldVec B = wire_pair_field(p, s);
  B.B_z += s.bias_field();
  return B;
}

// Local gradient dB_z/dz of the wire field at a point, from the analytic
// derivative of the complex field (the uniform bias does not contribute).
inline double local_gradient(const FieldPoint& p, const WirePairSpec& s) {
  s.check();
  std::complex<double> acc(0.0, 0.0);
  for (int j = 0; j < 2; ++j) {
    const double sj = (j == 0) ? 1.0 : -1.0;
    const std::complex<double> pos(sj * s.z_w, -0.5 * s.z_w);
    const std::complex<double> d = std::complex<double>(p.y, p.z) - pos;
    if (d == std::complex<double>(0.0, 0.0))
      throw std::domain_error("local_gradient: point on a wire");
    acc += sj / (d * d);
  }
  const std::complex<double> Wp = -mu0 * s.I_w / (2.0 * pi) * acc;
  return (std::complex<double>(0.0, 1.0) * Wp).real();
}

inline double gradient_at_origin(const WirePairSpec& s) { return s.gradient(); }

// Leading-order coefficient of the relative gradient variation across the
// strip half-width: eps ~ alpha (w/z_w)^2.
inline constexpr double gradient_inhomogeneity_alpha = 0.72;

inline double gradient_inhomogeneity_estimate(const WirePairSpec& s,
                                              double w) {
  const double r = w / s.z_w;
  return gradient_inhomogeneity_alpha * r * r;
}

// Exact relative deviation of the local gradient at the strip edge (w/2, 0)
// from its value at the origin.
inline double gradient_inhomogeneity(const WirePairSpec& s, double w) {
  if (!(w > 0.0))
    throw std::domain_error("gradient_inhomogeneity: require w > 0");
  const double b0 = local_gradient({0.0, 0.0}, s);
  const double be = local_gradient({0.5 * w, 0.0}, s);
  return (be - b0) / b0;
}

// Total field near the strip: compensated applied field plus the strip's
// screening response driven by the origin gradient.
inline FieldVec total_field_with_strip(const FieldPoint& p,
                                       const WirePairSpec& s,
                                       const StripSpec& strip, double z_m) {
  const FieldVec applied = wire_applied_field(p, s);
  const StripState st{z_m, s.gradient(), Mode::Quadrupole};
  const FieldVec resp = b_field(p, st, strip);
  return {applied.B_y + resp.B_y, applied.B_z + resp.B_z};
}

// A_x of the compensated source (wires plus bias), for field maps. Gauge:
// the wire pair term vanishes on the symmetry axis y = 0, and the bias term
// -B_b * y keeps the total odd in y.
inline double wire_vector_potential(const FieldPoint& p,
                                    const WirePairSpec& s) {
  s.check();
  const double r0 = std::hypot(p.y - s.z_w, p.z + 0.5 * s.z_w);
  const double r1 = std::hypot(p.y + s.z_w, p.z + 0.5 * s.z_w);
  if (r0 == 0.0 || r1 == 0.0)
    throw std::domain_error("wire_vector_potential: point on a wire");
  return -(mu0 * s.I_w / (2.0 * pi)) * std::log(r0 / r1) -
         s.bias_field() * p.y;
}

// Three-state critical-field predicate with a 1e-3 relative tolerance band
// so that operating exactly at the design limit reads as at-limit rather
// than flip-flopping on rounding.
enum class SafetyStatus { Ok, AtLimit, Exceeded };

inline SafetyStatus field_safety(double B_corner, double B_c) {
  if (!(B_c > 0.0)) throw std::domain_error("field_safety: require B_c > 0");
  const double r = B_corner / B_c;
  if (r < 1.0 - 1e-3) return SafetyStatus::Ok;
  if (r <= 1.0 + 1e-3) return SafetyStatus::AtLimit;
  return SafetyStatus::Exceeded;
}

inline const char* safety_label(SafetyStatus s) {
  switch (s) {
    case SafetyStatus::Ok: return "ok";
    case SafetyStatus::AtLimit: return "at-limit";
    default: return "exceeded";
  }
}

} // namespace mmc
