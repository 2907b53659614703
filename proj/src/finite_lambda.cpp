#include "mmc/finite_lambda.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "mmc/analytic_strip.hpp"
#include "mmc/constants.hpp"

namespace mmc {

namespace {

// Antiderivative of ln|u|; the kernel integrals over panels are exact edge
// differences of this, which keeps the weakly singular diagonal well behaved.
double F_log(double u) {
  if (u == 0.0) return 0.0;
  return u * std::log(std::abs(u)) - u;
}

// Antiderivative of ln(u^2 + z^2) in u.
double G_log(double u, double z) {
  const double s = u * u + z * z;
  if (s == 0.0) return 0.0;
  double v = u * std::log(s) - 2.0 * u;
  if (z != 0.0) v += 2.0 * z * std::atan(u / z);
  return v;
}

void fill_sine_mesh(double a, int panels, std::vector<double>& edges,
                    std::vector<double>& centers) {
  edges.resize(panels + 1);
  centers.resize(panels);
  for (int k = 0; k <= panels; ++k) {
    const double th = -0.5 * pi + pi * double(k) / panels;
    edges[k] = a * std::sin(th);
  }
  edges.front() = -a;
  edges.back() = a;
  for (int i = 0; i < panels; ++i) {
    const double th = -0.5 * pi + pi * (i + 0.5) / panels;
    centers[i] = a * std::sin(th);
  }
}

} // namespace

LondonSolution solve_london_strip(double w, double pearl, int panels) {
  if (!(w > 0.0) || !(pearl >= 0.0))
    throw std::domain_error("solve_london_strip: require w > 0, Lambda >= 0");
  if (panels < 8)
    throw std::domain_error("solve_london_strip: require at least 8 panels");

  LondonSolution sol;
  sol.w = w;
  fill_sine_mesh(0.5 * w, panels, sol.edges, sol.centers);

  // mu0 * Lambda * K(y) - (mu0/2pi) int K(y') ln|y-y'| dy' = B_a * y, B_a = 1
  Eigen::MatrixXd A(panels, panels);
  Eigen::VectorXd rhs(panels);
  const double c = mu0 / (2.0 * pi);
  for (int i = 0; i < panels; ++i) {
    const double yi = sol.centers[i];
    rhs(i) = yi;
    for (int j = 0; j < panels; ++j) {
      const double kern =
          F_log(yi - sol.edges[j]) - F_log(yi - sol.edges[j + 1]);
      A(i, j) = -c * kern;
    }
    A(i, i) += mu0 * pearl;
  }
  const Eigen::VectorXd K = A.partialPivLu().solve(rhs);
  sol.K.assign(K.data(), K.data() + panels);
  return sol;
}

double london_vector_potential(const LondonSolution& sol, double y, double z) {
  const double c = mu0 / (4.0 * pi);
  double acc = 0.0;
  for (std::size_t j = 0; j + 1 < sol.edges.size(); ++j) {
    acc += sol.K[j] *
           (G_log(y - sol.edges[j], z) - G_log(y - sol.edges[j + 1], z));
  }
  return -c * acc;
}

namespace {

double ratio_vs_ideal(const LondonSolution& sol, const CoilSpec& coil,
                      const StripSpec& strip) {
  const double A_lam =
      london_vector_potential(sol, 0.5 * coil.w_c, coil.z_c) -
      london_vector_potential(sol, -0.5 * coil.w_c, coil.z_c);
  const StripState unit{0.0, 1.0, Mode::Homogeneous};
  const double A_ideal =
      vector_potential({0.5 * coil.w_c, coil.z_c}, unit, strip) -
      vector_potential({-0.5 * coil.w_c, coil.z_c}, unit, strip);
  return A_lam / A_ideal;
}

} // namespace

double eta_lambda_ratio(double pearl_over_w, const CoilSpec& coil,
                        const StripSpec& strip, int panels) {
  if (!(pearl_over_w >= 0.0))
    throw std::domain_error("eta_lambda_ratio: require Lambda/w >= 0");
  coil.check();
  if (pearl_over_w == 0.0) return 1.0;
  const LondonSolution sol =
      solve_london_strip(strip.w, pearl_over_w * strip.w, panels);
  return ratio_vs_ideal(sol, coil, strip);
}

double eta_lambda_ratio_fit(double pearl_over_w, const CoilSpec& coil,
                            const StripSpec& strip, int panels) {
  if (!(pearl_over_w >= 0.0))
    throw std::domain_error("eta_lambda_ratio_fit: require Lambda/w >= 0");
  coil.check();
  if (pearl_over_w == 0.0) return 1.0;
  LondonSolution sol;
  sol.w = strip.w;
  fill_sine_mesh(0.5 * strip.w, panels, sol.edges, sol.centers);
  sol.K.resize(panels);
  const StripState unit{0.0, 1.0, Mode::Homogeneous};
  const double pearl = pearl_over_w * strip.w;
  for (int j = 0; j < panels; ++j)
    sol.K[j] = sheet_current_finite_lambda(sol.centers[j], pearl, unit, strip);
  return ratio_vs_ideal(sol, coil, strip);
}

} // namespace mmc
