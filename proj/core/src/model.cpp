#include "jobcost/model.hpp"

#include <cmath>
#include <sstream>

#include "jobcost/errors.hpp"

namespace jobcost {

namespace {

void require_positive_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw Error(ErrorCode::NonPositiveTheta, "theta must be positive and finite, got " +
                                                 std::to_string(theta));
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidCalibration, what);
}

}  // namespace

void Calibration::validate() const {
  require(std::isfinite(y) && std::isfinite(z), "y and z must be finite");
  require(y > z, "y must exceed z");
  require(r > 0.0, "r must be positive");
  require(s > 0.0 && s < 1.0, "s must lie in (0,1)");
  require(phi >= 0.0 && phi < 1.0, "phi must lie in [0,1)");
  require(c >= 0.0, "c must be nonnegative");
  require(h >= 0.0, "h must be nonnegative");
  require(ell >= 0.0, "ell must be nonnegative");
  require(tau >= 0.0, "tau must be nonnegative");
}

MatchingTech::MatchingTech(Family family, double efficiency, double shape)
    : family_(family), efficiency_(efficiency), shape_(shape) {}

MatchingTech MatchingTech::den_haan_ramey_watson(double mu, double gamma) {
  if (!(mu > 0.0) || !(gamma > 0.0)) {
    throw Error(ErrorCode::InvalidCalibration, "DRW matching needs mu > 0 and gamma > 0");
  }
  return {Family::DenHaanRameyWatson, mu, gamma};
}

MatchingTech MatchingTech::cobb_douglas(double efficiency, double exponent) {
  if (!(efficiency > 0.0) || !(exponent > 0.0 && exponent < 1.0)) {
    throw Error(ErrorCode::InvalidCalibration,
                "Cobb-Douglas matching needs A > 0 and exponent in (0,1)");
  }
  return {Family::CobbDouglas, efficiency, exponent};
}

MatchingTech MatchingTech::with_efficiency(double efficiency) const {
  return family_ == Family::DenHaanRameyWatson ? den_haan_ramey_watson(efficiency, shape_)
                                               : cobb_douglas(efficiency, shape_);
}

double MatchingTech::q(double theta) const {
  if (family_ == Family::CobbDouglas) return efficiency_ * std::pow(theta, -shape_);
  // (1 + theta^g)^(-1/g) through log1p keeps precision for small theta^g.
  return efficiency_ * std::exp(-std::log1p(std::pow(theta, shape_)) / shape_);
}

double MatchingTech::dq(double theta) const {
  if (family_ == Family::CobbDouglas) {
    return -shape_ * efficiency_ * std::pow(theta, -shape_ - 1.0);
  }
  // q'(theta) = -q(theta) * eta(theta) / theta
  return -q(theta) * elasticity(theta) / theta;
}

double MatchingTech::df(double theta) const { return q(theta) * (1.0 - elasticity(theta)); }

double MatchingTech::elasticity(double theta) const {
  if (family_ == Family::CobbDouglas) return shape_;
  // theta^g / (1 + theta^g) written to stay accurate for large theta^g.
  return 1.0 / (1.0 + std::pow(theta, -shape_));
}

double MatchingTech::matches(double u, double v) const {
  if (family_ == Family::CobbDouglas) {
    return efficiency_ * std::pow(u, shape_) * std::pow(v, 1.0 - shape_);
  }
  return efficiency_ * u * v / std::pow(std::pow(u, shape_) + std::pow(v, shape_), 1.0 / shape_);
}

std::string MatchingTech::describe() const {
  std::ostringstream os;
  os.precision(10);
  if (family_ == Family::CobbDouglas) {
    os << "CobbDouglas(A=" << efficiency_ << ", a=" << shape_ << ")";
  } else {
    os << "DRW(mu=" << efficiency_ << ", gamma=" << shape_ << ")";
  }
  return os.str();
}

double fill_rate(const MatchingTech& tech, double theta) {
  require_positive_theta(theta);
  const double q = tech.q(theta);
  if (q > 1.0) {
    throw Error(ErrorCode::ProbabilityOverflow,
                "q(" + std::to_string(theta) + ") = " + std::to_string(q) + " exceeds 1 for " +
                    tech.describe());
  }
  return q;
}

double find_rate(const MatchingTech& tech, double theta) {
  const double f = theta * fill_rate(tech, theta);
  if (f > 1.0) {
    throw Error(ErrorCode::ProbabilityOverflow,
                "f(" + std::to_string(theta) + ") = " + std::to_string(f) + " exceeds 1 for " +
                    tech.describe());
  }
  return f;
}

double matching_elasticity(const MatchingTech& tech, double theta) {
  require_positive_theta(theta);
  return tech.elasticity(theta);
}

double wage_firm_side(const Calibration& cal, const MatchingTech& tech, double theta) {
  require_positive_theta(theta);
  const double rs = cal.r + cal.s;
  return cal.y - cal.beta() * cal.s * cal.tau - rs * cal.c / tech.q(theta) -
         rs * cal.h / (1.0 + cal.r);
}

double wage_worker_side(const Calibration& cal, const MatchingTech& tech, double theta) {
  require_positive_theta(theta);
  const double beta = cal.beta();
  return cal.z + cal.phi * (cal.y - cal.z - beta * cal.s * cal.tau + theta * cal.c) +
         beta * tech.f(theta) * (cal.phi * cal.h - (1.0 - cal.phi) * cal.ell);
}

double employment_value(const Calibration& cal, double w, double U) {
  const double beta = cal.beta();
  return (w + beta * cal.s * U) / (1.0 - beta * (1.0 - cal.s));
}

double filled_job_value_from_wage(const Calibration& cal, double w) {
  return (1.0 + cal.r) * (cal.y - w - cal.beta() * cal.s * cal.tau) / (cal.r + cal.s);
}

ValueFunctions value_functions(const Calibration& cal, const MatchingTech& tech, double theta,
                               double w) {
  require_positive_theta(theta);
  const double beta = cal.beta();
  const double q = tech.q(theta);
  const double f = theta * q;
  const double odds = cal.phi / (1.0 - cal.phi);

  ValueFunctions v;
  v.J = cal.c / (beta * q) + cal.h;
  v.V = 0.0;
  v.reservation_wage =
      cal.z + odds * cal.c * theta + f / (1.0 + cal.r) * (odds * cal.h - cal.ell);
  v.U = v.reservation_wage * (1.0 + cal.r) / cal.r;
  v.E = employment_value(cal, w, v.U);
  return v;
}

}  // namespace jobcost
