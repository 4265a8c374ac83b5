#include "jobcost/calibration.hpp"

#include <cmath>

#include "jobcost/equilibrium.hpp"
#include "jobcost/errors.hpp"

namespace jobcost {

namespace {

bool is_probability(double p) { return p > 0.0 && p < 1.0; }

}  // namespace

void MonthlyTargets::validate() const {
  if (!(theta_star > 0.0)) throw Error(ErrorCode::InvalidCalibration, "theta_star must be positive");
  if (!is_probability(f_monthly) || !is_probability(s_monthly) || !is_probability(r_monthly)) {
    throw Error(ErrorCode::InvalidCalibration, "monthly f, s and r must lie in (0,1)");
  }
  if (!(days_per_month >= 1.0)) throw Error(ErrorCode::InvalidCalibration, "days_per_month < 1");
  if (!(y > z)) throw Error(ErrorCode::InvalidCalibration, "y must exceed z");
  if (!(phi >= 0.0 && phi < 1.0)) throw Error(ErrorCode::InvalidCalibration, "phi must be in [0,1)");
}

DailyRates monthly_to_daily(const MonthlyTargets& t) {
  const double k = 1.0 / t.days_per_month;
  return {std::expm1(k * std::log1p(t.r_monthly)), -std::expm1(k * std::log1p(-t.s_monthly)),
          -std::expm1(k * std::log1p(-t.f_monthly))};
}

MonthlyTargets daily_to_monthly(const DailyRates& d, const MonthlyTargets& like) {
  MonthlyTargets t = like;
  const double n = like.days_per_month;
  t.r_monthly = std::expm1(n * std::log1p(d.r));
  t.s_monthly = -std::expm1(n * std::log1p(-d.s));
  t.f_monthly = -std::expm1(n * std::log1p(-d.f));
  return t;
}

double implied_unemployment(const MonthlyTargets& t) {
  return t.s_monthly / (t.s_monthly + t.f_monthly);
}

double calibrate_mu(const MonthlyTargets& targets, double gamma) {
  return calibrate_matching(targets, MatchingTech::Family::DenHaanRameyWatson, gamma).efficiency();
}

MatchingTech calibrate_matching(const MonthlyTargets& targets, MatchingTech::Family family,
                                double shape) {
  targets.validate();
  const double f = monthly_to_daily(targets).f;
  const double theta = targets.theta_star;
  // Both families are linear in their efficiency parameter.
  const auto unit = family == MatchingTech::Family::DenHaanRameyWatson
                        ? MatchingTech::den_haan_ramey_watson(1.0, shape)
                        : MatchingTech::cobb_douglas(1.0, shape);
  const auto tech = unit.with_efficiency(f / unit.f(theta));
  const double q = tech.q(theta);
  if (!(q > 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::ProbabilityOverflow,
                "calibrated q(theta*) = " + std::to_string(q) + " for " + tech.describe());
  }
  return tech;
}

Calibration base_calibration(const MonthlyTargets& targets) {
  targets.validate();
  const auto daily = monthly_to_daily(targets);
  Calibration cal;
  cal.y = targets.y;
  cal.z = targets.z;
  cal.r = daily.r;
  cal.s = daily.s;
  cal.phi = targets.phi;
  return cal;
}

double solve_c_given_costs(const Calibration& cal_without_c, const MatchingTech& tech,
                           double theta_star, double h, double ell) {
  Calibration cal = cal_without_c;
  cal.h = h;
  cal.ell = ell;
  const double beta = cal.beta();
  const double rs = cal.r + cal.s;
  const double one_minus_phi = 1.0 - cal.phi;
  const double q = tech.q(theta_star);
  const double f = theta_star * q;
  const double surplus =
      cal.y - cal.z - beta * cal.s * cal.tau - beta * rs * h / one_minus_phi;
  const double left_for_vacancies =
      surplus - f / (1.0 + cal.r) * (cal.phi * h / one_minus_phi - ell);
  const double c = left_for_vacancies * one_minus_phi * q / (rs + cal.phi * f);
  if (!(c > 0.0)) {
    throw Error(ErrorCode::NonPositiveCost,
                "cost mix (h=" + std::to_string(h) + ", ell=" + std::to_string(ell) +
                    ") implies c = " + std::to_string(c));
  }
  return c;
}

double solve_h_max(const Calibration& cal, const MatchingTech& tech, double theta_star) {
  const double beta = cal.beta();
  const double one_minus_phi = 1.0 - cal.phi;
  const double f = tech.f(theta_star);
  return (cal.y - cal.z) / (beta * (cal.r + cal.s) / one_minus_phi +
                            f * cal.phi / ((1.0 + cal.r) * one_minus_phi));
}

std::vector<EconomyPreset> default_presets() {
  return {
      {"Baseline", 0.0, 0.0, std::nullopt},
      {"MiddleH", kHighFixedCost / 2.0, 0.0, std::nullopt},
      {"HighH", kHighFixedCost, 0.0, std::nullopt},
      {"Split", kHighFixedCost / 2.0, kHighFixedCost / 2.0, std::nullopt},
  };
}

CalibratedEconomy calibrate_economy(const MonthlyTargets& targets, const MatchingTech& tech,
                                    const EconomyPreset& preset) {
  Calibration cal = base_calibration(targets);
  cal.h = preset.h;
  cal.ell = preset.ell;
  cal.c = preset.c ? *preset.c
                   : solve_c_given_costs(cal, tech, targets.theta_star, preset.h, preset.ell);
  cal.validate();
  return {preset.name, cal, tech};
}

std::vector<TableRow> build_table(const MonthlyTargets& targets, const MatchingTech& tech,
                                  const std::vector<EconomyPreset>& presets,
                                  const WageElasticityOptions& options) {
  std::vector<TableRow> rows;
  rows.reserve(presets.size());
  for (const auto& preset : presets) {
    const auto economy = calibrate_economy(targets, tech, preset);
    const auto d = decompose(economy.cal, economy.tech, options);
    TableRow row;
    row.economy = economy.name;
    row.c = economy.cal.c;
    row.h = economy.cal.h;
    row.ell = economy.cal.ell;
    row.eta_theta_y = d.eta_theta_y;
    row.eta_w_y = d.eta_w_y;
    row.theta = d.theta;
    row.u = d.u;
    row.w = wage_firm_side(economy.cal, economy.tech, d.theta);
    row.upsilon = d.upsilon;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace jobcost
