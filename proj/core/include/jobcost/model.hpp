#pragma once

#include <cmath>
#include <string>

namespace jobcost {

/// Model primitives in per-period (daily) units.
struct Calibration {
  double y = 1.0;     // output per match
  double z = 0.71;    // flow value of nonwork
  double r = 0.0;     // per-period interest rate
  double s = 0.0;     // per-period separation probability
  double phi = 0.5;   // worker bargaining power
  double c = 0.0;     // flow vacancy-posting cost
  double h = 0.0;     // one-off hiring cost paid by the firm
  double ell = 0.0;   // one-off cost paid by the worker on accepting a job
  double tau = 0.0;   // layoff tax

  double beta() const noexcept { return 1.0 / (1.0 + r); }

  /// Throws Error(InvalidCalibration) naming the first violated bound.
  void validate() const;
};

/// Matching technology. Two families are supported:
///
///  - den Haan-Ramey-Watson: M(u,v) = mu*u*v / (u^gamma + v^gamma)^(1/gamma),
///    so q(theta) = mu*(1 + theta^gamma)^(-1/gamma) and the elasticity of
///    matches with respect to unemployment is theta^gamma / (1 + theta^gamma).
///  - Cobb-Douglas: M(u,v) = A*u^a*v^(1-a), q(theta) = A*theta^(-a), constant
///    elasticity a.
///
/// The member functions are the raw formulas and are defined for every
/// theta > 0; the free functions fill_rate/find_rate below add the checks that
/// the result is a probability.
class MatchingTech {
 public:
  enum class Family { DenHaanRameyWatson, CobbDouglas };

  static MatchingTech den_haan_ramey_watson(double mu, double gamma);
  static MatchingTech cobb_douglas(double efficiency, double exponent);

  Family family() const noexcept { return family_; }
  /// mu for DRW, A for Cobb-Douglas.
  double efficiency() const noexcept { return efficiency_; }
  /// gamma for DRW, a for Cobb-Douglas.
  double shape() const noexcept { return shape_; }

  double q(double theta) const;
  double dq(double theta) const;
  double f(double theta) const { return theta * q(theta); }
  double df(double theta) const;
  double elasticity(double theta) const;
  double matches(double u, double v) const;

  MatchingTech with_efficiency(double efficiency) const;
  std::string describe() const;

 private:
  MatchingTech(Family family, double efficiency, double shape);

  Family family_;
  double efficiency_;
  double shape_;
};

/// Job-filling probability q(theta). Throws NonPositiveTheta for theta <= 0 and
/// ProbabilityOverflow when the technology returns q > 1 at this theta.
double fill_rate(const MatchingTech& tech, double theta);

/// Job-finding probability f(theta) = theta*q(theta), with the same checks
/// (plus ProbabilityOverflow when f > 1).
double find_rate(const MatchingTech& tech, double theta);

/// Elasticity of matches with respect to unemployment, -q'(theta)*theta/q.
double matching_elasticity(const MatchingTech& tech, double theta);

/// Wage traced out by firms' job creation.
double wage_firm_side(const Calibration& cal, const MatchingTech& tech, double theta);

/// Wage traced out by workers' job creation (Nash bargaining).
double wage_worker_side(const Calibration& cal, const MatchingTech& tech, double theta);

struct ValueFunctions {
  double J = 0.0;   // filled job
  double V = 0.0;   // vacancy (zero under free entry)
  double E = 0.0;   // employed worker at wage w
  double U = 0.0;   // unemployed worker
  double reservation_wage = 0.0;
};

ValueFunctions value_functions(const Calibration& cal, const MatchingTech& tech, double theta,
                               double w);

/// Value of employment at wage w given the value of unemployment U.
double employment_value(const Calibration& cal, double w, double U);

/// J written in terms of the wage rather than recruiting costs.
double filled_job_value_from_wage(const Calibration& cal, double w);

inline double steady_state_unemployment(double s, double f) { return s / (s + f); }

/// Steady-state unemployment after converting per-period s and f to
/// probabilities over n periods (n = 30 turns daily rates into the monthly
/// rate that the targets are stated in).
inline double steady_state_unemployment_over(double s, double f, double n) {
  const double sn = -std::expm1(n * std::log1p(-s));
  const double fn = -std::expm1(n * std::log1p(-f));
  return sn / (sn + fn);
}

struct Equilibrium {
  double theta = 0.0;
  double u = 0.0;
  double w = 0.0;
  ValueFunctions values;
};

}  // namespace jobcost
