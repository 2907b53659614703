#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmc {

// Numerical failure distinct from domain/config errors so the CLI can map it
// to its own exit code.
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input (scenario files, sweep paths); maps to the usage exit code
// rather than the domain-validation one.
class parse_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Fixed scientific formatting, 9 significant digits, locale-independent.
// Every float that reaches a report or CSV goes through this so output is
// byte-reproducible.
inline std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

// Full-precision round-trip formatting for scenario serialization.
inline std::string fmt_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Derivative-free 1D maximization by golden-section refined until the bracket
// is below xtol. Deterministic and robust for the smooth unimodal profiles it
// is used on.
inline double maximize_scalar(const std::function<double(double)>& f, double a,
                              double b, double xtol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 400 && (b - a) > xtol; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Bisection root find; requires a sign change on [a, b].
inline double find_root(const std::function<double(double)>& f, double a,
                        double b, double xtol) {
  double fa = f(a), fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0) == (fb > 0))
    throw numerical_error("find_root: no sign change in bracket");
  for (int it = 0; it < 400 && (b - a) > xtol; ++it) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0.0) return m;
    if ((fm > 0) == (fa > 0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Least-squares straight line y = c0 + c1*x; returns {c0, c1}.
inline std::pair<double, double> linear_fit(const std::vector<double>& x,
                                            const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw numerical_error("linear_fit: need at least two points");
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  double den = n * sxx - sx * sx;
  if (den == 0.0) throw numerical_error("linear_fit: degenerate abscissae");
  double c1 = (n * sxy - sx * sy) / den;
  double c0 = (sy - c1 * sx) / n;
  return {c0, c1};
}

} // namespace mmc
