#include "jobcost/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jobcost/errors.hpp"
#include "jobcost/numeric.hpp"

namespace jobcost {

std::string_view to_string(Uniqueness u) {
  switch (u) {
    case Uniqueness::GuaranteedByParameters: return "GuaranteedByParameters";
    case Uniqueness::VerifiedNumerically: return "VerifiedNumerically";
    case Uniqueness::MultipleRootsDetected: return "MultipleRootsDetected";
  }
  return "Unknown";
}

std::string_view to_string(UniquenessClass u) {
  return u == UniquenessClass::GuaranteedByParameters ? "GuaranteedByParameters"
                                                      : "NumericalCheckRequired";
}

Feasibility initial_vacancy_feasible(const Calibration& cal) {
  const double beta = cal.beta();
  const double margin = (1.0 - cal.phi) * (cal.y - cal.z - beta * cal.s * cal.tau) /
                            (cal.r + cal.s) -
                        (cal.c + beta * cal.h);
  return {margin, margin > 0.0};
}

double theta_bar(const Calibration& cal, const MatchingTech&) {
  if (cal.phi == 0.0) {
    throw Error(ErrorCode::ZeroBargainingPower, "theta_bar is unbounded when phi = 0");
  }
  if (cal.c == 0.0) {
    throw Error(ErrorCode::ZeroVacancyCost, "theta_bar is unbounded when c = 0");
  }
  const double beta = cal.beta();
  const double bracket = cal.y - cal.z - beta * cal.s * cal.tau -
                         beta * (cal.r + cal.s) * cal.h / (1.0 - cal.phi) + beta * cal.ell;
  if (!(bracket > 0.0)) {
    throw Error(ErrorCode::NonPositiveUpperBracket,
                "y - z - beta*s*tau - beta(r+s)h/(1-phi) + beta*ell = " + std::to_string(bracket));
  }
  return (1.0 - cal.phi) / (cal.c * cal.phi) * bracket;
}

double big_t(const Calibration& cal, const MatchingTech& tech, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveTheta, "T(x) needs x > 0");
  const double beta = cal.beta();
  const double rs = cal.r + cal.s;
  const double one_minus_phi = 1.0 - cal.phi;
  const double q = tech.q(x);
  const double split = cal.phi * cal.h - one_minus_phi * cal.ell;
  const double fundamental_surplus =
      cal.y - cal.z - beta * cal.s * cal.tau - beta * rs * cal.h / one_minus_phi;
  // c/(1-phi) * [(r+s+phi*x*q)/q + beta*x*q*split/c], expanded so c = 0 is fine.
  return fundamental_surplus - cal.c * (rs / q + cal.phi * x) / one_minus_phi -
         beta * x * q * split / one_minus_phi;
}

double big_t_prime(const Calibration& cal, const MatchingTech& tech, double x) {
  if (!(x > 0.0)) throw Error(ErrorCode::NonPositiveTheta, "T'(x) needs x > 0");
  const double beta = cal.beta();
  const double one_minus_phi = 1.0 - cal.phi;
  const double q = tech.q(x);
  const double split = cal.phi * cal.h - one_minus_phi * cal.ell;
  return cal.c * (cal.r + cal.s) * tech.dq(x) / (one_minus_phi * q * q) -
         cal.c * cal.phi / one_minus_phi - beta * tech.df(x) * split / one_minus_phi;
}

UniquenessClass uniqueness_class(const Calibration& cal) {
  const double split = cal.phi * cal.h - (1.0 - cal.phi) * cal.ell;
  return split >= 0.0 ? UniquenessClass::GuaranteedByParameters
                      : UniquenessClass::NumericalCheckRequired;
}

SolveReport solve_theta(const Calibration& cal, const MatchingTech& tech,
                        const SolveOptions& options) {
  cal.validate();
  const auto feasibility = initial_vacancy_feasible(cal);
  if (!feasibility.feasible) {
    throw Error(ErrorCode::InvalidCalibration,
                "initial vacancy is not profitable (margin " +
                    std::to_string(feasibility.margin) + ")");
  }

  const auto t = [&](double x) { return big_t(cal, tech, x); };
  const double lo = options.lower_bracket;

  SolveReport report;
  report.t_at_zero = t(lo);
  if (!(report.t_at_zero > 0.0)) {
    throw Error(ErrorCode::NoSignChange,
                "T at the lower bracket is " + std::to_string(report.t_at_zero));
  }

  double hi = 0.0;
  try {
    hi = theta_bar(cal, tech);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ZeroBargainingPower && e.code() != ErrorCode::ZeroVacancyCost) {
      throw;
    }
    // Geometric expansion from theta = 1 until T turns negative.
    report.theta_bar_analytic = false;
    hi = 1.0;
    while (t(hi) > 0.0 && hi < 1e12) hi *= 2.0;
  }
  report.theta_bar = hi;
  if (!(hi > lo) || t(hi) > 0.0) {
    throw Error(ErrorCode::NoSignChange,
                "T does not change sign on (" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "]");
  }

  // Sign scan on a geometric grid; the root lives anywhere from 1e-12 up to
  // thousands depending on the cost mix, so a linear grid would be too coarse.
  const int n = std::max(options.scan_points, 2);
  const double log_lo = std::log(lo), log_hi = std::log(hi);
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) {
    grid[i] = std::exp(log_lo + (log_hi - log_lo) * i / (n - 1));
  }
  grid.front() = lo;
  grid.back() = hi;

  std::vector<double> values(n);
  report.t_prime_min = std::numeric_limits<double>::infinity();
  report.t_prime_max = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    values[i] = t(grid[i]);
    const double tp = big_t_prime(cal, tech, grid[i]);
    report.t_prime_min = std::min(report.t_prime_min, tp);
    report.t_prime_max = std::max(report.t_prime_max, tp);
  }

  std::vector<std::pair<int, int>> crossings;
  for (int i = 0; i + 1 < n; ++i) {
    if ((values[i] > 0.0) != (values[i + 1] > 0.0)) crossings.emplace_back(i, i + 1);
  }
  report.sign_changes = static_cast<int>(crossings.size());

  std::vector<double> roots;
  int iterations = 0;
  double residual = 0.0;
  for (const auto& [a, b] : crossings) {
    const auto root = numeric::find_root(t, grid[a], grid[b], values[a], values[b], options.tol, 500);
    roots.push_back(root.root);
    iterations += root.iterations;
    residual = root.residual;
  }
  if (roots.size() > 1) {
    throw MultipleEquilibria(roots, std::to_string(roots.size()) +
                                        " crossings of T on the scan grid");
  }
  // Endpoints straddle a root, so an odd number of crossings is guaranteed.
  report.theta_star = roots.front();
  report.iterations = iterations;
  report.residual = residual;
  report.uniqueness = uniqueness_class(cal) == UniquenessClass::GuaranteedByParameters
                          ? Uniqueness::GuaranteedByParameters
                          : Uniqueness::VerifiedNumerically;
  return report;
}

Equilibrium solve_equilibrium(const Calibration& cal, const MatchingTech& tech,
                              const SolveOptions& options) {
  const auto report = solve_theta(cal, tech, options);
  Equilibrium eq;
  eq.theta = report.theta_star;
  eq.u = steady_state_unemployment(cal.s, tech.f(eq.theta));
  eq.w = wage_firm_side(cal, tech, eq.theta);
  eq.values = value_functions(cal, tech, eq.theta, eq.w);
  return eq;
}

}  // namespace jobcost
