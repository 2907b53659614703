#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "mmc/constants.hpp"

namespace mmc {

// Superconducting strip: geometry and material. All SI.
struct StripSpec {
  double L;        // length [m]
  double w;        // width [m]
  double t;        // thickness [m]
  double B_c;      // first critical field [T]
  double rho;      // mass density [kg/m^3]
  double lambda_L; // London penetration depth [m]
  double xi;       // coherence length [m]

  // Pearl length of the film; derived, never stored.
  double pearl_length() const { return lambda_L * lambda_L / t; }

  void check() const {
    if (!(L > w && w > t && t > 0))
      throw std::domain_error("StripSpec: require L > w > t > 0");
    if (!(B_c > 0 && rho > 0 && lambda_L > 0 && xi > 0))
      throw std::domain_error("StripSpec: material parameters must be > 0");
  }

  bool operator==(const StripSpec&) const = default;
};

// Cantilever carrying the strip plus its mechanical mode and bath.
struct CantileverSpec {
  double t0;    // cantilever thickness [m]
  double rho0;  // cantilever density [kg/m^3]
  double Omega; // angular mechanical frequency [rad/s]
  double gamma; // mechanical damping rate [rad/s]
  double T;     // bath temperature [K]

  void check() const {
    if (!(t0 > 0 && rho0 > 0 && Omega > 0 && gamma > 0 && T > 0))
      throw std::domain_error("CantileverSpec: all fields must be > 0");
  }

  bool operator==(const CantileverSpec&) const = default;
};

// Rectangular pick-up coil: width w_c across the strip, long side L_c along
// it, plane at height z_c above the strip plane.
struct CoilSpec {
  double w_c; // coil width [m]
  double z_c; // coil height above strip plane [m]
  double L_c; // coil length [m]

  void check() const {
    if (!(w_c > 0 && z_c > 0 && L_c > 0))
      throw std::domain_error("CoilSpec: all fields must be > 0");
  }

  bool operator==(const CoilSpec&) const = default;
};

struct ValidationCheck {
  std::string name;
  bool pass;
  double measured; // the ratio the threshold applies to
  double threshold;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Model-validity checks for the thin-strip Meissner description. Failing
// checks are warnings surfaced by the CLI, never aborts.
inline ValidationReport validate_strip(const StripSpec& s) {
  s.check();
  ValidationReport r;
  const double thin = 0.1;
  r.checks.push_back({"t/w << 1", s.t / s.w < thin, s.t / s.w, thin});
  // Screening-length check: either the bulk condition lambda << t or the
  // thin-film condition Pearl << w must hold.
  double r1 = s.lambda_L / s.t;
  double r2 = s.pearl_length() / s.w;
  bool pass_b = (r1 < thin) || (r2 < thin);
  r.checks.push_back(
      {"lambda << t or Pearl << w", pass_b, std::min(r1, r2), thin});
  r.checks.push_back({"t > xi", s.t > s.xi, s.xi / s.t, 1.0});
  r.checks.push_back({"L/w >= 10", s.L / s.w >= 10.0, s.L / s.w, 10.0});
  return r;
}

// Effective mass of the loaded cantilever tip: strip plus carrier layer over
// the strip footprint.
inline double effective_mass(const StripSpec& s, const CantileverSpec& c) {
  s.check();
  c.check();
  return s.L * s.w * (s.rho * s.t + c.rho0 * c.t0);
}

// RMS ground-state displacement of the mechanical mode.
inline double zero_point_motion(double M, double Omega) {
  if (!(M > 0 && Omega > 0))
    throw std::domain_error("zero_point_motion: require M > 0, Omega > 0");
  return std::sqrt(hbar / (2.0 * M * Omega));
}

} // namespace mmc
