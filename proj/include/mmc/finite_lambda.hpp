#pragma once

#include <vector>

#include "mmc/domain.hpp"

namespace mmc {

// Piecewise-constant collocation solution of the 1D London integral equation
// for the strip sheet current at finite Pearl length, per unit drive field.
// Panel edges are sine-graded so resolution concentrates at the strip edges
// where the ideal profile diverges.
struct LondonSolution {
  double w = 0.0;
  std::vector<double> edges;   // panels + 1 edges, [-w/2, w/2]
  std::vector<double> centers; // collocation points
  std::vector<double> K;       // sheet current per unit drive field [A/m/T]
};

LondonSolution solve_london_strip(double w, double pearl, int panels = 1200);

// A_x at (y, z) induced by a panel current distribution, per unit drive.
double london_vector_potential(const LondonSolution& sol, double y, double z);

// Transduction reduction factor eta(Lambda)/eta(0) for the given coil above
// the strip, from the collocation solve. Exactly 1 at Lambda = 0.
double eta_lambda_ratio(double pearl_over_w, const CoilSpec& coil,
                        const StripSpec& strip, int panels = 1200);

// Same ratio but integrating the closed-form fit profile instead of solving
// the integral equation; kept separate because the fit is a current-profile
// interpolation, not a flux-accurate model.
double eta_lambda_ratio_fit(double pearl_over_w, const CoilSpec& coil,
                            const StripSpec& strip, int panels = 4000);

} // namespace mmc
