#pragma once

#include <string_view>
#include <vector>

#include "jobcost/model.hpp"

namespace jobcost {

enum class Uniqueness { GuaranteedByParameters, VerifiedNumerically, MultipleRootsDetected };
enum class UniquenessClass { GuaranteedByParameters, NumericalCheckRequired };

std::string_view to_string(Uniqueness u);
std::string_view to_string(UniquenessClass u);

struct Feasibility {
  double margin = 0.0;  // (1-phi)(y-z-beta*s*tau)/(r+s) - (c + beta*h)
  bool feasible = false;
};

/// Whether posting the very first vacancy (filled immediately) is profitable.
Feasibility initial_vacancy_feasible(const Calibration& cal);

/// Upper end of the interval that contains the equilibrium tightness.
/// Throws ZeroBargainingPower (phi = 0), ZeroVacancyCost (c = 0) or
/// NonPositiveUpperBracket.
double theta_bar(const Calibration& cal, const MatchingTech& tech);

/// Equilibrium condition T(x); the steady state solves T(theta) = 0.
double big_t(const Calibration& cal, const MatchingTech& tech, double x);
/// Analytic derivative of big_t.
double big_t_prime(const Calibration& cal, const MatchingTech& tech, double x);

/// phi*h - (1-phi)*ell >= 0 makes workers' job-creation curve slope upward,
/// which guarantees a unique equilibrium.
UniquenessClass uniqueness_class(const Calibration& cal);

struct SolveOptions {
  double tol = 1e-12;           // on theta
  double lower_bracket = 1e-12;
  int scan_points = 512;
};

struct SolveReport {
  double theta_star = 0.0;
  double theta_bar = 0.0;      // upper bracket actually used
  bool theta_bar_analytic = true;  // false when found by bracket expansion
  double t_at_zero = 0.0;      // T at the lower bracket
  double t_prime_min = 0.0;    // over the scan grid
  double t_prime_max = 0.0;
  Uniqueness uniqueness = Uniqueness::VerifiedNumerically;
  int sign_changes = 0;
  int iterations = 0;
  double residual = 0.0;
};

/// Solves T(theta) = 0 on (lower_bracket, theta_bar]. Throws
/// InvalidCalibration if the initial vacancy is not profitable, NoSignChange
/// if the bracket does not straddle a root and MultipleEquilibria (carrying
/// every root) when the scan finds more than one crossing.
SolveReport solve_theta(const Calibration& cal, const MatchingTech& tech,
                        const SolveOptions& options = {});

/// Solve plus the implied steady-state objects.
Equilibrium solve_equilibrium(const Calibration& cal, const MatchingTech& tech,
                              const SolveOptions& options = {});

}  // namespace jobcost
