#include "jobcost/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "jobcost/errors.hpp"

namespace jobcost::numeric {

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double x_tol,
                     int max_iterations) {
  return find_root(f, lo, hi, f(lo), f(hi), x_tol, max_iterations);
}

RootResult find_root(const std::function<double(double)>& f, double lo, double hi, double f_lo,
                     double f_hi, double x_tol, int max_iterations) {
  if (f_lo == 0.0) return {lo, 0.0, 0};
  if (f_hi == 0.0) return {hi, 0.0, 0};
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi) || (f_lo > 0.0) == (f_hi > 0.0)) {
    throw Error(ErrorCode::NoSignChange,
                "bracket [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] has f values " + std::to_string(f_lo) + " and " + std::to_string(f_hi));
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  double a = lo, b = hi, fa = f_lo, fb = f_hi;
  double c = a, fc = fa;
  double d = b - a, e = d;

  int it = 0;
  for (; it < max_iterations; ++it) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol = 2.0 * eps * std::abs(b) + 0.5 * x_tol;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0.0) break;

    if (std::abs(e) >= tol && std::abs(fa) > std::abs(fb)) {
      double p, q;
      const double s = fb / fa;
      if (a == c) {
        // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        // inverse quadratic interpolation
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return {b, std::abs(fb), it};
}

MinimumResult golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double x_tol, int max_iterations) {
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  if (hi < lo) std::swap(lo, hi);
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  int it = 0;
  while (b - a > x_tol && it < max_iterations) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
    ++it;
  }
  return f1 <= f2 ? MinimumResult{x1, f1, it} : MinimumResult{x2, f2, it};
}

}  // namespace jobcost::numeric
