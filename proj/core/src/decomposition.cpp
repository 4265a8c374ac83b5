#include "jobcost/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "jobcost/errors.hpp"

namespace jobcost {

double fundamental_surplus(const Calibration& cal) {
  const double beta = cal.beta();
  return cal.y - cal.z - beta * cal.s * cal.tau -
         beta * (cal.r + cal.s) * cal.h / (1.0 - cal.phi);
}

double upsilon(const Calibration& cal, const MatchingTech& tech, double theta) {
  if (!(theta > 0.0)) throw Error(ErrorCode::NonPositiveTheta, "upsilon needs theta > 0");
  if (!(cal.c > 0.0)) {
    throw Error(ErrorCode::ZeroVacancyCost, "upsilon is undefined when c = 0");
  }
  const double beta = cal.beta();
  const double rs = cal.r + cal.s;
  const double q = tech.q(theta);
  const double f = theta * q;
  const double eta = tech.elasticity(theta);
  const double split = (cal.phi * cal.h - (1.0 - cal.phi) * cal.ell) / cal.c;
  const double numerator = rs + f * (cal.phi + beta * q * split);
  const double denominator = rs * eta + f * (cal.phi + beta * (1.0 - eta) * q * split);
  return numerator / denominator;
}

double upsilon_bound(double eta_mu) {
  if (!(eta_mu > 0.0 && eta_mu < 1.0)) {
    throw Error(ErrorCode::OutOfRangeElasticity,
                "matching elasticity must lie in (0,1), got " + std::to_string(eta_mu));
  }
  return std::max(1.0 / eta_mu, 1.0 / (1.0 - eta_mu));
}

double eta_theta_y(const Calibration& cal, const MatchingTech& tech, double theta) {
  const double surplus = fundamental_surplus(cal);
  if (!(surplus > 0.0)) {
    throw Error(ErrorCode::NonPositiveSurplus,
                "fundamental surplus is " + std::to_string(surplus));
  }
  return upsilon(cal, tech, theta) * cal.y / surplus;
}

double eta_u_y(const Calibration& cal, const MatchingTech& tech, double theta) {
  const double u = steady_state_unemployment(cal.s, tech.f(theta));
  return -(1.0 - u) * (1.0 - tech.elasticity(theta)) * eta_theta_y(cal, tech, theta);
}

namespace {

double equilibrium_wage_at(Calibration cal, const MatchingTech& tech, double y,
                           const SolveOptions& options) {
  cal.y = y;
  const auto report = solve_theta(cal, tech, options);
  return wage_firm_side(cal, tech, report.theta_star);
}

}  // namespace

double eta_w_y(const Calibration& cal, const MatchingTech& tech,
               const WageElasticityOptions& options) {
  const double y = cal.y;
  const double dy = options.rel_step * y;
  const double w0 = equilibrium_wage_at(cal, tech, y, options.solve);
  const double w_up = equilibrium_wage_at(cal, tech, y + dy, options.solve);
  const double w_down = equilibrium_wage_at(cal, tech, y - dy, options.solve);

  double slope = (w_up - w_down) / (2.0 * dy);
  const double forward = (w_up - w0) / dy;
  const double backward = (w0 - w_down) / dy;
  if (std::abs(forward - backward) > options.richardson_trigger * std::abs(slope)) {
    const double half = dy / 2.0;
    const double slope_half = (equilibrium_wage_at(cal, tech, y + half, options.solve) -
                               equilibrium_wage_at(cal, tech, y - half, options.solve)) /
                              (2.0 * half);
    slope = (4.0 * slope_half - slope) / 3.0;
  }
  return slope * y / w0;
}

Decomposition decompose(const Calibration& cal, const MatchingTech& tech,
                        const WageElasticityOptions& options) {
  const auto report = solve_theta(cal, tech, options.solve);
  Decomposition d;
  d.theta = report.theta_star;
  d.u = steady_state_unemployment(cal.s, tech.f(d.theta));
  d.eta_mu_at_theta = tech.elasticity(d.theta);
  d.upsilon = upsilon(cal, tech, d.theta);
  d.upsilon_bound = upsilon_bound(d.eta_mu_at_theta);
  d.surplus_fraction = fundamental_surplus(cal) / cal.y;
  d.eta_theta_y = eta_theta_y(cal, tech, d.theta);
  d.eta_u_y = -(1.0 - d.u) * (1.0 - d.eta_mu_at_theta) * d.eta_theta_y;
  d.eta_w_y = eta_w_y(cal, tech, options);
  return d;
}

std::vector<SweepPoint> sweep_y(const Calibration& cal, const MatchingTech& tech,
                                std::span<const double> y_grid, const SolveOptions& options,
                                double periods_per_month) {
  std::vector<SweepPoint> out;
  out.reserve(y_grid.size());
  for (const double y : y_grid) {
    SweepPoint p;
    p.y = y;
    Calibration at = cal;
    at.y = y;
    try {
      const auto report = solve_theta(at, tech, options);
      p.theta = report.theta_star;
      p.u = steady_state_unemployment(at.s, tech.f(p.theta));
      p.u_monthly = steady_state_unemployment_over(at.s, tech.f(p.theta), periods_per_month);
      p.w = wage_firm_side(at, tech, p.theta);
      p.bound = upsilon_bound(tech.elasticity(p.theta));
      p.feasible = true;
    } catch (const Error& e) {
      p.flag = std::string("InfeasibleAtY: ") + e.what();
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  std::vector<double> grid;
  const auto n = static_cast<long>(std::floor((hi - lo) / step + 0.5));
  grid.reserve(static_cast<std::size_t>(n + 1));
  // Index-based and rounded so that y = 1 lands exactly on the grid.
  for (long i = 0; i <= n; ++i) {
    grid.push_back(std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12);
  }
  if (!grid.empty()) grid.back() = hi;
  return grid;
}

}  // namespace jobcost
