#include "jobcost/flows.hpp"

#include <limits>

#include "jobcost/errors.hpp"
#include "jobcost/numeric.hpp"

namespace jobcost {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kSeparationCeiling = 0.999;
constexpr double kFindingRateCeiling = 20.0;

}  // namespace

double separation_kernel(double s) {
  if (s < 1e-8) return -1.0 + 0.5 * s;
  return s / std::log1p(-s);
}

double forward_separation(double e_t, double hires, double s) {
  // survivors of the initial stock plus hires that are still employed at the
  // end of the month: hires * (1 - e^-varsigma)/varsigma = -hires * g(s)
  return e_t * (1.0 - s) - hires * separation_kernel(s);
}

double forward_finding(double e_t, double l_t, double varsigma, double varphi) {
  const double x = varsigma + varphi;
  if (x == 0.0) return e_t;
  return varphi * l_t * (-std::expm1(-x)) / x + e_t * std::exp(-x);
}

double solve_separation(const MonthObs& obs, double tol) {
  if (!(obs.e_t > 0.0) || obs.hires < 0.0) {
    throw Error(ErrorCode::NoRoot, "separation needs e_t > 0 and hires >= 0");
  }
  const auto gap = [&](double s) { return forward_separation(obs.e_t, obs.hires, s) - obs.e_next; };
  const double at_zero = gap(0.0);
  if (at_zero == 0.0) return 0.0;
  const double at_ceiling = gap(kSeparationCeiling);
  if (at_zero < 0.0 || at_ceiling > 0.0) {
    throw Error(ErrorCode::NoRoot, obs.date.to_string() + ": no separation probability in [0, " +
                                       std::to_string(kSeparationCeiling) +
                                       "] fits e_t, e_next and hires");
  }
  return numeric::find_root(gap, 0.0, kSeparationCeiling, at_zero, at_ceiling, tol, 500).root;
}

ApproxSeparation approx_separation(const MonthObs& obs) {
  const double s = 1.0 - (obs.e_next - obs.hires) / obs.e_t;
  if (s < 0.0) return {0.0, true};
  if (s >= 1.0) return {std::nextafter(1.0, 0.0), true};
  return {s, false};
}

double solve_finding_rate(const MonthObs& obs, double varsigma, double tol) {
  if (!(obs.l_t > obs.e_t)) {
    throw Error(ErrorCode::DegenerateLaborForce,
                obs.date.to_string() + ": labor force does not exceed employment");
  }
  if (obs.e_t < 0.0 || varsigma < 0.0) {
    throw Error(ErrorCode::NoRoot, "finding needs e_t >= 0 and varsigma >= 0");
  }
  const auto gap = [&](double x) { return forward_finding(obs.e_t, obs.l_t, varsigma, x) - obs.e_next; };
  const double at_zero = gap(0.0);
  if (at_zero == 0.0) return 0.0;
  const double at_ceiling = gap(kFindingRateCeiling);
  if (at_zero > 0.0 || at_ceiling < 0.0) {
    throw Error(ErrorCode::NoRoot, obs.date.to_string() +
                                       ": no finding rate in [0, 20] fits e_t, e_next and l_t");
  }
  return numeric::find_root(gap, 0.0, kFindingRateCeiling, at_zero, at_ceiling, tol, 500).root;
}

double solve_finding(const MonthObs& obs, double varsigma, double tol) {
  return probability_from_rate(solve_finding_rate(obs, varsigma, tol));
}

double uncorrected_finding(const MonthObs& obs) {
  if (!(obs.u_t > 0.0)) {
    throw Error(ErrorCode::ZeroUnemployment, obs.date.to_string() + ": unemployment is zero");
  }
  return obs.hires / obs.u_t;
}

double uncorrected_separation(double unrate_fraction, double f_uncorrected) {
  return unrate_fraction * f_uncorrected / (1.0 - unrate_fraction);
}

std::vector<FlowRates> adjust_series(std::span<const MonthObs> months) {
  std::vector<FlowRates> out;
  out.reserve(months.size());
  for (std::size_t i = 0; i < months.size(); ++i) {
    const MonthObs& obs = months[i];
    if (i > 0 && obs.date != months[i - 1].date.next()) {
      throw Error(ErrorCode::MisalignedSeries, "months are not consecutive at " +
                                                   months[i - 1].date.to_string() + " -> " +
                                                   obs.date.to_string());
    }
    FlowRates r;
    r.date = obs.date;
    r.s = r.f = r.varsigma = r.varphi = r.f_uncorrected = r.s_approx = kNaN;
    if (!obs.flag.empty()) {
      r.flag = obs.flag;
      out.push_back(r);
      continue;
    }
    try {
      r.f_uncorrected = uncorrected_finding(obs);
      r.s_approx = approx_separation(obs).s;
      if (obs.unrate_percent) {
        r.s_uncorrected = uncorrected_separation(*obs.unrate_percent / 100.0, r.f_uncorrected);
      }
      r.s = solve_separation(obs);
      r.varsigma = rate_from_probability(r.s);
      r.varphi = solve_finding_rate(obs, r.varsigma);
      r.f = probability_from_rate(r.varphi);
    } catch (const Error& e) {
      r.flag = e.what();
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace jobcost
