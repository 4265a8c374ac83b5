#pragma once

#include <cstddef>
#include <functional>

namespace jobcost::numeric {

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // |f(root)|
  int iterations = 0;
};

/// Bracketed root of a continuous scalar function on [lo, hi]. Combines
/// bisection with secant and inverse-quadratic steps (Brent-Dekker), so it
/// keeps the bisection guarantee while converging superlinearly on smooth
/// problems. The function is never evaluated outside [lo, hi].
///
/// Requires f(lo) and f(hi) of opposite sign (or one of them zero); otherwise
/// throws Error(NoSignChange). Stops when the bracket is narrower than
/// x_tol + 4*eps*|x|.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi,
                     double x_tol = 1e-12, int max_iterations = 500);

/// Same as find_root but with the endpoint values already known.
RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                     double f_hi, double x_tol, int max_iterations);

struct MinimumResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section minimisation of a unimodal function on [lo, hi], refined
/// until the bracket is narrower than x_tol.
MinimumResult golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double x_tol = 1e-8, int max_iterations = 500);

/// Central finite difference of f at x with absolute step h.
inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace jobcost::numeric
