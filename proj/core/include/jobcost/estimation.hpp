#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jobcost/calendar.hpp"
#include "jobcost/flows.hpp"

namespace jobcost {

/// Regime windows for the two efficiency shifters, inclusive on both ends.
struct RegimeWindows {
  YearMonth g_first{2007, 12};
  YearMonth g_last{2020, 1};
  YearMonth c_first{2020, 2};

  bool in_g(YearMonth m) const noexcept { return g_first <= m && m <= g_last; }
  bool in_c(YearMonth m) const noexcept { return c_first <= m; }
};

struct EstimationSample {
  std::vector<YearMonth> dates;
  std::vector<double> log_f;
  std::vector<double> log_theta;
  std::vector<int> g;
  std::vector<int> c;
  std::vector<bool> excluded;  // flagged or incomplete months

  std::size_t size() const noexcept { return dates.size(); }
  std::size_t n_used() const;
};

/// Sample from corrected flow rates and the vacancy and unemployment series.
/// theta = vacancies / unemployment. Months that are flagged, or whose theta
/// or f is missing or non-positive, are kept but excluded. Throws
/// MisalignedSeries when a month of rates has no entry at all in either series.
EstimationSample build_sample(std::span<const FlowRates> rates, const DatedSeries& vacancies,
                              const DatedSeries& unemployment, const RegimeWindows& windows = {});

/// Sample from plain vectors (finding probabilities and tightness), for
/// synthetic data.
EstimationSample make_sample(std::span<const YearMonth> dates, std::span<const double> f,
                             std::span<const double> theta, const RegimeWindows& windows = {});

struct FitOptions {
  double gamma_lo = 0.01;
  double gamma_hi = 5.0;
  double gamma_tol = 1e-8;
  int coarse_points = 64;
  bool use_dummies = true;
  std::optional<double> fixed_gamma;
};

struct EstimationResult {
  double alpha = 0.0;
  double gamma = 0.0;
  double psi = 0.0;
  double xi = 0.0;
  double ssr = 0.0;
  std::vector<double> residuals;  // NaN on excluded rows
  double smear_factor = 1.0;
  std::size_t n_obs = 0;
  bool use_dummies = true;
  bool gamma_fixed = false;
  bool at_boundary = false;
  std::string warning;
  int iterations = 0;
};

/// Linear coefficients (alpha, psi, xi) and SSR for a fixed gamma.
struct ProfiledFit {
  double alpha = 0.0;
  double psi = 0.0;
  double xi = 0.0;
  double ssr = 0.0;
};
ProfiledFit profile_gamma(const EstimationSample& sample, double gamma, bool use_dummies);

/// Nonlinear least squares for
///   log f = alpha + log theta - (1/gamma) log(1 + theta^gamma) + psi*G + xi*C.
/// gamma is profiled: for each gamma the rest is linear and solved exactly, and
/// SSR(gamma) is minimised by a coarse grid followed by golden section.
/// A minimum on the edge of the bracket is returned with at_boundary set and a
/// warning (NoInteriorMinimum). Throws TooFewObservations below 10 rows and
/// RankDeficientDummies when a dummy has no observations (or covers them all).
EstimationResult fit_nls(const EstimationSample& sample, const FitOptions& options = {});

enum class Regime { Base, GreatRecession, Covid };

Regime regime_of(YearMonth m, const RegimeWindows& windows = {});

/// Naive level prediction mu * theta * (1 + theta^gamma)^(-1/gamma).
double naive_predict(const EstimationResult& fit, double theta, Regime regime = Regime::Base);
/// Naive prediction times the smearing factor.
double smear_predict(const EstimationResult& fit, double theta, Regime regime = Regime::Base);
/// Linear predictor on the log scale.
double log_predict(const EstimationResult& fit, double theta, Regime regime = Regime::Base);

/// theta^gamma / (1 + theta^gamma) per point.
std::vector<double> elasticity_series(double gamma, std::span<const double> theta);
/// max{1/eta, 1/(1-eta)} per point.
std::vector<double> bound_series(double gamma, std::span<const double> theta);

}  // namespace jobcost
