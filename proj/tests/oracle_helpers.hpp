#pragma once

// Independent numerical oracles for the test suite: Gauss-Legendre
// quadrature, filament-sum field evaluations of the strip response, finite
// differences, and Neumann-formula segment mutuals. The field oracles build
// everything from the sheet-current density and elementary 2D filament
// potentials, never from the closed forms under test.

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracle {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double mu0 = 4.0e-7 * pi;

struct GL {
  std::vector<double> x; // nodes on [-1, 1]
  std::vector<double> w;
};

// Nodes by Newton iteration on the Legendre recurrence.
inline GL gauss_legendre(int n) {
  GL g;
  g.x.resize(n);
  g.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    g.x[i] = x;
    g.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return g;
}

inline double integrate(const std::function<double(double)>& f, double a,
                        double b, const GL& gl) {
  const double xm = 0.5 * (a + b), xr = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < gl.x.size(); ++i)
    acc += gl.w[i] * f(xm + xr * gl.x[i]);
  return acc * xr;
}

// ---------------------------------------------------------------- strip

// The ideal strip sheet current K(y') = (amp/mu0) 2y'/sqrt(a^2-y'^2) is
// integrated against elementary filament kernels with the substitution
// y' = a sin(theta), which removes the edge singularity:
//   K dy' = (amp/mu0) 2 a sin(theta) dtheta.

// A_x(y, z): each filament contributes -(mu0 I / 2 pi) ln r. The total
// current vanishes, so the potential decays at infinity and carries the
// same gauge as a closed form that also vanishes at infinity.
inline double strip_A(double y, double z, double z_m, double w, double amp,
                      const GL& gl) {
  const double a = 0.5 * w;
  const double dz = z - z_m;
  const auto f = [&](double th) {
    const double yp = a * std::sin(th);
    const double r2 = (y - yp) * (y - yp) + dz * dz;
    return 2.0 * a * std::sin(th) * (-0.5 * std::log(r2));
  };
  return (amp / (2.0 * pi)) * integrate(f, -0.5 * pi, 0.5 * pi, gl);
}

inline double strip_By(double y, double z, double z_m, double w, double amp,
                       const GL& gl) {
  const double a = 0.5 * w;
  const double dz = z - z_m;
  const auto f = [&](double th) {
    const double yp = a * std::sin(th);
    const double r2 = (y - yp) * (y - yp) + dz * dz;
    return 2.0 * a * std::sin(th) * (-dz / r2);
  };
  return (amp / (2.0 * pi)) * integrate(f, -0.5 * pi, 0.5 * pi, gl);
}

inline double strip_Bz(double y, double z, double z_m, double w, double amp,
                       const GL& gl) {
  const double a = 0.5 * w;
  const double dz = z - z_m;
  const auto f = [&](double th) {
    const double yp = a * std::sin(th);
    const double r2 = (y - yp) * (y - yp) + dz * dz;
    return 2.0 * a * std::sin(th) * ((y - yp) / r2);
  };
  return (amp / (2.0 * pi)) * integrate(f, -0.5 * pi, 0.5 * pi, gl);
}

// Coil flux per unit length pair: Phi = L_c [A(+w_c/2) - A(-w_c/2)], the
// gauge constant cancelling in the difference.
inline double strip_flux(double w_c, double z_c, double L_c, double z_m,
                         double w, double amp, const GL& gl) {
  return L_c * (strip_A(0.5 * w_c, z_c, z_m, w, amp, gl) -
                strip_A(-0.5 * w_c, z_c, z_m, w, amp, gl));
}

// ---------------------------------------------------- finite differences

// Richardson-extrapolated central difference, O(h^4).
inline double deriv(const std::function<double(double)>& f, double x,
                    double h) {
  const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
  const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

// ------------------------------------------------------------- Neumann

// Mutual of two parallel filaments a distance d apart, first running over
// [a1, a2] and second over [b1, b2] along the same axis:
//   M = (mu0 / 4 pi) int int ds ds' / sqrt((s - s')^2 + d^2).
inline double neumann_parallel(double a1, double a2, double b1, double b2,
                               double d, const GL& gl) {
  const auto inner = [&](double s) {
    const auto f = [&](double sp) {
      return 1.0 / std::sqrt((s - sp) * (s - sp) + d * d);
    };
    return integrate(f, b1, b2, gl);
  };
  return mu0 / (4.0 * pi) * integrate(inner, a1, a2, gl);
}

// Mutual inductance of two coplanar rectangular cell loops, both traversed
// counter-clockwise, centers separated by (sx, sy), cell size (dx, dy).
// Perpendicular leg pairs contribute nothing to the Neumann integral.
inline double cell_pair_mutual(double sx, double sy, double dx, double dy,
                               const GL& gl) {
  const double hx = 0.5 * dx, hy = 0.5 * dy;
  double m = 0.0;
  // x-directed legs: bottom (+), top (-) of each loop
  const double ya[2] = {-hy, hy};
  const double yb[2] = {sy - hy, sy + hy};
  const double s[2] = {1.0, -1.0};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m += s[i] * s[j] *
           neumann_parallel(-hx, hx, sx - hx, sx + hx, ya[i] - yb[j], gl);
  // y-directed legs: right (+), left (-)
  const double xa[2] = {hx, -hx};
  const double xb[2] = {sx + hx, sx - hx};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      m += s[i] * s[j] *
           neumann_parallel(-hy, hy, sy - hy, sy + hy, xa[i] - xb[j], gl);
  return m;
}

} // namespace oracle
