#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jobcost/decomposition.hpp"
#include "jobcost/model.hpp"

namespace jobcost {

/// Monthly steady-state targets. The model itself runs at a daily period; the
/// conversion happens once, in monthly_to_daily.
struct MonthlyTargets {
  double theta_star = 0.72;
  double f_monthly = 0.594;
  double r_monthly = 0.004;
  double s_monthly = 0.036;
  double days_per_month = 30.0;
  double z = 0.71;
  double y = 1.0;
  double phi = 0.5;

  void validate() const;
};

struct DailyRates {
  double r = 0.0;
  double s = 0.0;
  double f = 0.0;
};

/// r compounds; s and f convert as probabilities, 1 - (1 - p)^(1/days).
DailyRates monthly_to_daily(const MonthlyTargets& targets);
/// Inverse of monthly_to_daily for the same day count.
MonthlyTargets daily_to_monthly(const DailyRates& daily, const MonthlyTargets& like);

/// s_m / (s_m + f_m).
double implied_unemployment(const MonthlyTargets& targets);

/// Matching efficiency mu that makes the daily f(theta*) hit the target for a
/// DRW technology with the given gamma. Throws ProbabilityOverflow if the
/// implied q(theta*) is not a probability.
double calibrate_mu(const MonthlyTargets& targets, double gamma);

/// Calibrated technology of either family: DRW(mu, shape) or
/// Cobb-Douglas(A, shape).
MatchingTech calibrate_matching(const MonthlyTargets& targets, MatchingTech::Family family,
                                double shape);

/// Daily calibration with c left at zero; costs are filled in by the preset.
Calibration base_calibration(const MonthlyTargets& targets);

/// Flow vacancy cost that makes theta* an equilibrium given (h, ell).
/// Throws NonPositiveCost when the cost mix leaves nothing for vacancies.
double solve_c_given_costs(const Calibration& cal_without_c, const MatchingTech& tech,
                           double theta_star, double h, double ell);

/// Largest firm-paid fixed cost compatible with theta* (the h that drives c to 0
/// with ell = tau = 0).
double solve_h_max(const Calibration& cal, const MatchingTech& tech, double theta_star);

/// One row of the cost-mix experiment. c is solved unless pinned.
struct EconomyPreset {
  std::string name;
  double h = 0.0;
  double ell = 0.0;
  std::optional<double> c;
};

/// HighH fixed cost used by the built-in presets.
inline constexpr double kHighFixedCost = 8.976;

/// Baseline, MiddleH, HighH, Split.
std::vector<EconomyPreset> default_presets();

struct CalibratedEconomy {
  std::string name;
  Calibration cal;
  MatchingTech tech;
};

CalibratedEconomy calibrate_economy(const MonthlyTargets& targets, const MatchingTech& tech,
                                    const EconomyPreset& preset);

struct TableRow {
  std::string economy;
  double c = 0.0;
  double h = 0.0;
  double ell = 0.0;
  double eta_theta_y = 0.0;
  double eta_w_y = 0.0;
  double theta = 0.0;
  double u = 0.0;
  double w = 0.0;
  double upsilon = 0.0;
};

std::vector<TableRow> build_table(const MonthlyTargets& targets, const MatchingTech& tech,
                                  const std::vector<EconomyPreset>& presets,
                                  const WageElasticityOptions& options = {});

}  // namespace jobcost
