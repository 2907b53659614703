#include "mmc/mem.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mmc/analytic_strip.hpp"
#include "mmc/constants.hpp"
#include "mmc/util.hpp"

namespace mmc {

namespace {

// Geometric-mean-distance factor of a thin sheet segment from itself: the
// self term of an edge current representing a band of the given pitch.
constexpr double gmd_factor = 0.22313016014842982; // exp(-3/2)

// Neumann antiderivative for parallel filaments at lateral distance rho.
double Fp(double u, double rho) {
  return u * std::asinh(u / rho) - std::hypot(u, rho);
}

// Collinear (rho = 0) finite part; valid for non-overlapping segments where
// the logarithmic pieces cancel in the second difference.
double Fp0(double u) {
  const double au = std::abs(u);
  if (au < 1e-300) return 0.0;
  return au * (std::log(au) - 1.0);
}

// Mutual (up to mu0/4pi) of two parallel equal-length segments, axial centre
// offset s, lateral distance rho.
double Dseg(double s, double l, double rho) {
  return Fp(s - l, rho) - 2.0 * Fp(s, rho) + Fp(s + l, rho);
}

double Dseg0(double s, double l) {
  return Fp0(s - l) - 2.0 * Fp0(s) + Fp0(s + l);
}

// Laterally separated pairs use the true distance; pairs on the same line
// are either coincident (axial offset zero, regularized by the sheet GMD) or
// collinear and disjoint, where the rho = 0 finite part is exact.
double pair_term(double s, double l, double rho, double reff) {
  if (rho > 0.0) return Dseg(s, l, rho);
  if (s < 0.5 * l) return Dseg(s, l, reff);
  return Dseg0(s, l);
}

// Mutual (up to mu0/4pi) of two parallel segments spanning [a1,a2] and
// [b1,b2] along their common axis at lateral distance rho.
double seg_general(double a1, double a2, double b1, double b2, double rho) {
  return Fp(a2 - b1, rho) + Fp(a1 - b2, rho) - Fp(a2 - b2, rho) -
         Fp(a1 - b1, rho);
}

// In-plane B_z of finite straight segments carrying current I.
double bz_xseg(double I, double ys, double xa, double xb, double X, double Y) {
  const double d = Y - ys;
  return mu0 * I / (4.0 * pi) / d *
         ((xb - X) / std::hypot(xb - X, d) - (xa - X) / std::hypot(xa - X, d));
}

double bz_yseg(double I, double xs, double ya, double yb, double X, double Y) {
  const double d = X - xs;
  return mu0 * I / (4.0 * pi) / d *
         ((Y - yb) / std::hypot(Y - yb, d) - (Y - ya) / std::hypot(Y - ya, d));
}

} // namespace

void MemGrid::check() const {
  if (nx < 2 || ny < 2)
    throw std::domain_error("MemGrid: require nx >= 2 and ny >= 2");
  if (!(L > 0.0) || !(w > 0.0))
    throw std::domain_error("MemGrid: require L > 0 and w > 0");
  if (n() > 12000)
    throw numerical_error("MemGrid: more than 12000 cells would exceed the "
                          "dense-solver memory budget");
}

MutualTable build_mutual_table(const MemGrid& g) {
  g.check();
  MutualTable tab;
  tab.nx = g.nx;
  tab.ny = g.ny;
  tab.dx = g.dx();
  tab.dy = g.dy();
  tab.T.resize(std::size_t(g.nx) * g.ny);
  const double dx = tab.dx, dy = tab.dy;
  const double rx = gmd_factor * dy; // x-directed legs represent dy-wide bands
  const double ry = gmd_factor * dx;
  for (int di = 0; di < g.nx; ++di) {
    const double sx = di * dx;
    for (int dj = 0; dj < g.ny; ++dj) {
      const double sy = dj * dy;
      const double mx = 2.0 * pair_term(sx, dx, sy, rx) -
                        pair_term(sx, dx, sy + dy, rx) -
                        pair_term(sx, dx, std::abs(sy - dy), rx);
      const double my = 2.0 * pair_term(sy, dy, sx, ry) -
                        pair_term(sy, dy, sx + dx, ry) -
                        pair_term(sy, dy, std::abs(sx - dx), ry);
      tab.T[std::size_t(di) * g.ny + dj] = mu0 / (4.0 * pi) * (mx + my);
    }
  }
  return tab;
}

Eigen::MatrixXd assemble_kernel(const MemGrid& g) {
  const MutualTable tab = build_mutual_table(g);
  const int n = g.n();
  Eigen::MatrixXd C(n, n);
  for (int q = 0; q < n; ++q) {
    const int i2 = q / g.ny, j2 = q % g.ny;
    for (int p = 0; p < n; ++p) {
      const int i1 = p / g.ny, j1 = p % g.ny;
      C(p, q) = tab.at(i1 - i2, j1 - j2);
    }
  }
  return C;
}

MemSolution solve_meissner(const MemGrid& g, double drive) {
  g.check();
  MemSolution sol;
  sol.grid = g;
  sol.drive = drive;
  const int n = g.n();
  if (drive == 0.0) {
    sol.I = Eigen::VectorXd::Zero(n);
    sol.energy = 0.0;
    return sol;
  }
  const double phi_cell = drive * g.dx() * g.dy();
  Eigen::MatrixXd C = assemble_kernel(g);
  const Eigen::VectorXd rhs = Eigen::VectorXd::Constant(n, -phi_cell);
  Eigen::LLT<Eigen::Ref<Eigen::MatrixXd>> llt(C); // factor in place
  if (llt.info() != Eigen::Success)
    throw numerical_error("solve_meissner: kernel factorization failed");
  sol.I = llt.solve(rhs);
  sol.energy = 0.5 * phi_cell * sol.I.sum();
  return sol;
}

double coil_cell_mutual(const MemGrid& g, int i, int j, const CoilSpec& coil,
                        CoilCoupling mode) {
  const double x0 = g.cell_x(i), y0 = g.cell_y(j);
  const double dx = g.dx(), dy = g.dy();
  double m = 0.0;
  // Long legs of the coil against the cell's x-directed legs. The coil is
  // traversed clockwise seen from above (+x along the y = +w_c/2 leg), the
  // orientation for which the ideal pickup flux is +2 L_c A_x(+w_c/2).
  const double ys_arr[2] = {-0.5 * coil.w_c, 0.5 * coil.w_c};
  const double sc_arr[2] = {-1.0, 1.0};
  const double yo_arr[2] = {y0 - 0.5 * dy, y0 + 0.5 * dy};
  const double so_arr[2] = {1.0, -1.0};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double rho = std::hypot(ys_arr[a] - yo_arr[b], coil.z_c);
      m += sc_arr[a] * so_arr[b] *
           seg_general(-0.5 * coil.L_c, 0.5 * coil.L_c, x0 - 0.5 * dx,
                       x0 + 0.5 * dx, rho);
    }
  if (mode == CoilCoupling::FullRectangle) {
    const double xs_arr[2] = {0.5 * coil.L_c, -0.5 * coil.L_c};
    const double xo_arr[2] = {x0 + 0.5 * dx, x0 - 0.5 * dx};
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        const double rho = std::hypot(xs_arr[a] - xo_arr[b], coil.z_c);
        m += sc_arr[a] * so_arr[b] *
             seg_general(-0.5 * coil.w_c, 0.5 * coil.w_c, y0 - 0.5 * dy,
                         y0 + 0.5 * dy, rho);
      }
  }
  return mu0 / (4.0 * pi) * m;
}

double coil_flux_from_cells(const MemSolution& sol, const CoilSpec& coil,
                            CoilCoupling mode) {
  coil.check();
  const MemGrid& g = sol.grid;
  double acc = 0.0;
  for (int i = 0; i < g.nx; ++i)
    for (int j = 0; j < g.ny; ++j)
      acc += coil_cell_mutual(g, i, j, coil, mode) * sol.I(g.index(i, j));
  return acc;
}

Eigen::VectorXd mem_flux_residual(const MemSolution& sol) {
  const MemGrid& g = sol.grid;
  const MutualTable tab = build_mutual_table(g);
  const double phi_cell = sol.drive * g.dx() * g.dy();
  const int n = g.n();
  Eigen::VectorXd r(n);
  for (int p = 0; p < n; ++p) {
    const int i1 = p / g.ny, j1 = p % g.ny;
    double acc = 0.0;
    for (int q = 0; q < n; ++q) {
      const int i2 = q / g.ny, j2 = q % g.ny;
      acc += tab.at(i1 - i2, j1 - j2) * sol.I(q);
    }
    r(p) = acc + phi_cell;
  }
  return r;
}

double mem_bz_at(const MemSolution& sol, double X, double Y) {
  const MemGrid& g = sol.grid;
  const double hx = 0.5 * g.dx(), hy = 0.5 * g.dy();
  double acc = 0.0;
  for (int i = 0; i < g.nx; ++i) {
    const double x0 = g.cell_x(i);
    for (int j = 0; j < g.ny; ++j) {
      const double y0 = g.cell_y(j);
      const double I = sol.I(g.index(i, j));
      // counter-clockwise loop: +x along the bottom, +y along the right
      acc += bz_xseg(I, y0 - hy, x0 - hx, x0 + hx, X, Y);
      acc += bz_xseg(-I, y0 + hy, x0 - hx, x0 + hx, X, Y);
      acc += bz_yseg(I, x0 + hx, y0 - hy, y0 + hy, X, Y);
      acc += bz_yseg(-I, x0 - hx, y0 - hy, y0 + hy, X, Y);
    }
  }
  return acc;
}

std::vector<SheetSample> mem_sheet_profile(const MemSolution& sol) {
  const MemGrid& g = sol.grid;
  const int i = g.nx / 2;
  std::vector<SheetSample> out;
  out.reserve(g.ny - 1);
  for (int j = 0; j + 1 < g.ny; ++j) {
    const double y = -0.5 * g.w + (j + 1) * g.dy();
    const double K = (sol.I(g.index(i, j + 1)) - sol.I(g.index(i, j))) / g.dy();
    out.push_back({y, K});
  }
  return out;
}

MemGrid default_mem_grid(double L_over_w, double w, int ny) {
  if (!(L_over_w > 0.0) || !(w > 0.0))
    throw std::domain_error("default_mem_grid: require L/w > 0 and w > 0");
  const int nx = std::max<int>(2, std::lround(3.0 * L_over_w));
  MemGrid g{nx, std::max(ny, 2), L_over_w * w, w};
  g.check();
  return g;
}

FiniteLengthResult eta_finite_length(double L_over_w, const StripSpec& strip,
                                     const CoilSpec& coil,
                                     const std::vector<int>& ny_list,
                                     CoilCoupling mode) {
  if (!(L_over_w > 0.0))
    throw std::domain_error("eta_finite_length: require L/w > 0");
  if (ny_list.empty())
    throw std::domain_error("eta_finite_length: no grid sizes given");
  FiniteLengthResult res;
  res.L_over_w = L_over_w;

  CoilSpec c2 = coil;
  c2.L_c = L_over_w * strip.w; // coil legs track the strip length
  c2.check();
  const StripState unit{0.0, 1.0, Mode::Homogeneous};
  const double phi_ideal =
      2.0 * c2.L_c * vector_potential({0.5 * c2.w_c, c2.z_c}, unit, strip);

  for (int ny : ny_list) {
    try {
      const MemGrid g = default_mem_grid(L_over_w, strip.w, ny);
      const MemSolution sol = solve_meissner(g, 1.0);
      const double phi = coil_flux_from_cells(sol, c2, mode);
      res.points.push_back({g.n(), g.nx, g.ny, phi / phi_ideal});
    } catch (const std::exception& e) {
      res.warnings.push_back("grid ny=" + std::to_string(ny) +
                             " failed: " + e.what());
    }
  }

  std::sort(res.points.begin(), res.points.end(),
            [](const FiniteLengthPoint& a, const FiniteLengthPoint& b) {
              return a.N < b.N;
            });
  res.points.erase(std::unique(res.points.begin(), res.points.end(),
                               [](const FiniteLengthPoint& a,
                                  const FiniteLengthPoint& b) {
                                 return a.N == b.N;
                               }),
                   res.points.end());

  if (res.points.size() >= 2) {
    const std::size_t k = std::min<std::size_t>(3, res.points.size());
    std::vector<double> xs, ys;
    for (std::size_t p = res.points.size() - k; p < res.points.size(); ++p) {
      xs.push_back(1.0 / res.points[p].N);
      ys.push_back(res.points[p].ratio);
    }
    const auto fit = linear_fit(xs, ys);
    res.extrapolated = fit.first;
    res.extrapolation_valid = true;
    if (res.points.size() < 3)
      res.warnings.push_back(
          "extrapolation from fewer than three grids is a straight line "
          "through two points; treat with caution");
  } else {
    res.warnings.push_back(
        "at least two grid refinements are needed to extrapolate");
  }
  return res;
}

} // namespace mmc
