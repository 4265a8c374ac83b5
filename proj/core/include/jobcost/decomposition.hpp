#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jobcost/equilibrium.hpp"
#include "jobcost/model.hpp"

namespace jobcost {

/// Resources firms can put toward vacancy creation:
/// y - z - beta*s*tau - beta*(r+s)*h/(1-phi).
double fundamental_surplus(const Calibration& cal);

/// First factor of the decomposition of the tightness elasticity. Requires c > 0.
double upsilon(const Calibration& cal, const MatchingTech& tech, double theta);

/// max{1/eta, 1/(1-eta)}; throws OutOfRangeElasticity outside (0,1).
double upsilon_bound(double eta_mu);

/// Elasticity of tightness with respect to productivity at theta,
/// upsilon * y / fundamental surplus.
double eta_theta_y(const Calibration& cal, const MatchingTech& tech, double theta);

/// Elasticity of steady-state unemployment with respect to productivity,
/// -(1-u)(1-eta_Mu)*eta_theta_y.
double eta_u_y(const Calibration& cal, const MatchingTech& tech, double theta);

struct WageElasticityOptions {
  double rel_step = 1e-6;
  double richardson_trigger = 1e-3;  // relative gap between one-sided estimates
  SolveOptions solve;
};

/// Elasticity of the equilibrium wage with respect to y by central
/// differences over full re-solves at y(1 +/- step). Falls back to a
/// Richardson extrapolation when the forward and backward estimates disagree.
double eta_w_y(const Calibration& cal, const MatchingTech& tech,
               const WageElasticityOptions& options = {});

struct Decomposition {
  double theta = 0.0;
  double u = 0.0;
  double upsilon = 0.0;
  double upsilon_bound = 0.0;
  double surplus_fraction = 0.0;
  double eta_theta_y = 0.0;
  double eta_u_y = 0.0;
  double eta_w_y = 0.0;
  double eta_mu_at_theta = 0.0;
};

/// Solves the economy and fills every field of Decomposition.
Decomposition decompose(const Calibration& cal, const MatchingTech& tech,
                        const WageElasticityOptions& options = {});

struct SweepPoint {
  double y = 0.0;
  bool feasible = false;
  double theta = 0.0;
  double u = 0.0;               // model-period steady state
  double u_monthly = 0.0;       // same economy, rates converted to months
  double w = 0.0;
  double bound = 0.0;          // upsilon bound at the solved theta
  std::string flag;            // empty when feasible, error text otherwise
};

/// Re-solves the economy for every productivity level in y_grid, holding the
/// rest of the calibration fixed. Infeasible points are kept and flagged.
std::vector<SweepPoint> sweep_y(const Calibration& cal, const MatchingTech& tech,
                                std::span<const double> y_grid, const SolveOptions& options = {},
                                double periods_per_month = 30.0);

/// Productivity grid [lo, hi] with the given step, endpoints included.
std::vector<double> make_grid(double lo, double hi, double step);

}  // namespace jobcost
