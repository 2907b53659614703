#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mmc/domain.hpp"

namespace mmc {

// Uniform rectangular mesh over the strip footprint; cells tile the plan
// area exactly by construction.
struct MemGrid {
  int nx = 0, ny = 0;   // cells along length and width
  double L = 0, w = 0;  // strip plan dimensions [m]

  void check() const;
  double dx() const { return L / nx; }
  double dy() const { return w / ny; }
  int n() const { return nx * ny; }
  double cell_x(int i) const { return -0.5 * L + (i + 0.5) * dx(); }
  double cell_y(int j) const { return -0.5 * w + (j + 0.5) * dy(); }
  int index(int i, int j) const { return i * ny + j; }
};

// Mutual inductance between two cell loops depends only on the absolute
// index offsets, so the full kernel is a lookup into an nx-by-ny table.
struct MutualTable {
  int nx = 0, ny = 0;
  double dx = 0, dy = 0;
  std::vector<double> T; // index |di| * ny + |dj|

  double at(int di, int dj) const {
    return T[std::size_t(std::abs(di)) * ny + std::abs(dj)];
  }
};

MutualTable build_mutual_table(const MemGrid& g);

// Dense symmetric positive definite inductance kernel over all cell pairs.
Eigen::MatrixXd assemble_kernel(const MemGrid& g);

struct MemSolution {
  MemGrid grid;
  double drive = 0.0;  // uniform applied B_z over the strip [T]
  Eigen::VectorXd I;   // circulating loop current per cell [A]
  double energy = 0.0; // interaction energy, negative for any screening [J]
};

// Solve C I = -Phi_a for the screening loop currents under a uniform drive.
MemSolution solve_meissner(const MemGrid& g, double drive);

// Whether coil end legs (the short sides of the rectangle) are included in
// the coil-cell coupling. For length-scaling studies the long legs alone are
// the right comparison against the translation-invariant ideal.
enum class CoilCoupling { FullRectangle, LongLegsOnly };

// Mutual inductance between the pick-up coil and one cell loop.
double coil_cell_mutual(const MemGrid& g, int i, int j, const CoilSpec& coil,
                        CoilCoupling mode);

double coil_flux_from_cells(const MemSolution& sol, const CoilSpec& coil,
                            CoilCoupling mode);

// Flux-balance residual C I + Phi_a per cell, recomputed from the offset
// table independently of the factorization.
Eigen::VectorXd mem_flux_residual(const MemSolution& sol);

// In-plane B_z at a point of the strip plane from all cell loops.
double mem_bz_at(const MemSolution& sol, double X, double Y);

// Sheet current profile K_x(y) across the strip at the central column,
// recovered from loop-current differences at interior row boundaries.
struct SheetSample {
  double y;
  double K;
};
std::vector<SheetSample> mem_sheet_profile(const MemSolution& sol);

// Fixed-aspect grid recipe: nx proportional to the aspect ratio so that the
// refinement series at fixed nx scales as 1/N.
MemGrid default_mem_grid(double L_over_w, double w, int ny);

struct FiniteLengthPoint {
  int N = 0, nx = 0, ny = 0;
  double ratio = 0.0; // coil flux relative to the infinite-strip ideal
};

struct FiniteLengthResult {
  double L_over_w = 0.0;
  std::vector<FiniteLengthPoint> points;
  double extrapolated = std::numeric_limits<double>::quiet_NaN();
  bool extrapolation_valid = false;
  std::vector<std::string> warnings;
};

// Finite-length transduction reduction: solve on a refinement series, take
// the coil-flux ratio against the ideal, and extrapolate in 1/N over the
// largest grids. The coil length is tied to the strip length.
FiniteLengthResult eta_finite_length(double L_over_w, const StripSpec& strip,
                                     const CoilSpec& coil,
                                     const std::vector<int>& ny_list,
                                     CoilCoupling mode =
                                         CoilCoupling::LongLegsOnly);

} // namespace mmc
