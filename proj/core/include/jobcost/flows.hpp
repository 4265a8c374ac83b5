#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jobcost/calendar.hpp"

namespace jobcost {

/// One month of raw stocks and flows, all in persons.
struct MonthObs {
  YearMonth date;
  double e_t = 0.0;     // employment at the start of the month
  double e_next = 0.0;  // employment at the start of the next month
  double hires = 0.0;   // cumulative hires reported for the month
  double l_t = 0.0;     // labor force
  double u_t = 0.0;     // unemployment level
  std::optional<double> unrate_percent;
  std::string flag;     // non-empty when assembly found a gap
};

struct FlowRates {
  YearMonth date;
  double s = 0.0;         // corrected monthly separation probability
  double f = 0.0;         // corrected monthly finding probability
  double varsigma = 0.0;  // -ln(1-s)
  double varphi = 0.0;    // -ln(1-f)
  double f_uncorrected = 0.0;
  double s_approx = 0.0;
  std::optional<double> s_uncorrected;
  std::string flag;

  bool ok() const noexcept { return flag.empty(); }
};

/// g(s) = s / ln(1-s), with the removable singularity at 0 filled by its series.
double separation_kernel(double s);

/// Employment at the next month implied by a separation probability when hires
/// arrive linearly within the month and new hires separate at the same rate.
double forward_separation(double e_t, double hires, double s);

/// Employment at the next month implied by constant Poisson rates of
/// separation and finding over the month.
double forward_finding(double e_t, double l_t, double varsigma, double varphi);

inline double rate_from_probability(double p) { return -std::log1p(-p); }
inline double probability_from_rate(double x) { return -std::expm1(-x); }

/// Inverts forward_separation on [0, 0.999]. Throws NoRoot when the data admit
/// no separation probability (e.g. e_next > e_t + hires).
double solve_separation(const MonthObs& obs, double tol = 1e-14);

struct ApproxSeparation {
  double s = 0.0;
  bool clipped = false;
};

/// 1 - (e_next - hires)/e_t, clipped to [0,1).
ApproxSeparation approx_separation(const MonthObs& obs);

/// Inverts forward_finding for the Poisson finding rate on [0, 20] and returns
/// the monthly probability. Throws DegenerateLaborForce if l_t <= e_t and NoRoot
/// if nothing in the bracket fits.
double solve_finding(const MonthObs& obs, double varsigma, double tol = 1e-14);

/// Same inversion, returning the Poisson rate itself.
double solve_finding_rate(const MonthObs& obs, double varsigma, double tol = 1e-14);

/// hires / u_t. Can exceed one; that is the point.
double uncorrected_finding(const MonthObs& obs);

/// Separation probability implied by the official unemployment rate and the
/// uncorrected finding probability, inverting u = s/(s+f).
double uncorrected_separation(double unrate_fraction, double f_uncorrected);

/// Runs both corrections month by month. Failing months are flagged and kept.
/// Throws MisalignedSeries if the months are not consecutive.
std::vector<FlowRates> adjust_series(std::span<const MonthObs> months);

}  // namespace jobcost
