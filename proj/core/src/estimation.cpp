#include "jobcost/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jobcost/errors.hpp"
#include "jobcost/numeric.hpp"

namespace jobcost {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::size_t kMinObservations = 10;

// log(1 + theta^gamma) / gamma, computed from log theta so that large gamma
// and tiny theta do not overflow.
double congestion(double log_theta, double gamma) {
  const double a = gamma * log_theta;
  const double lp = a > 30.0 ? a + std::log1p(std::exp(-a)) : std::log1p(std::exp(a));
  return lp / gamma;
}

struct GroupCounts {
  std::size_t base = 0, g = 0, c = 0;
};

GroupCounts count_groups(const EstimationSample& s) {
  GroupCounts n;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.excluded[i]) continue;
    if (s.g[i]) ++n.g;
    else if (s.c[i]) ++n.c;
    else ++n.base;
  }
  return n;
}

}  // namespace

std::size_t EstimationSample::n_used() const {
  return static_cast<std::size_t>(std::count(excluded.begin(), excluded.end(), false));
}

Regime regime_of(YearMonth m, const RegimeWindows& w) {
  if (w.in_g(m)) return Regime::GreatRecession;
  if (w.in_c(m)) return Regime::Covid;
  return Regime::Base;
}

EstimationSample build_sample(std::span<const FlowRates> rates, const DatedSeries& vacancies,
                              const DatedSeries& unemployment, const RegimeWindows& windows) {
  std::vector<YearMonth> dates;
  std::vector<double> f, theta;
  std::vector<bool> bad;
  for (const auto& r : rates) {
    const DatedPoint* v = vacancies.find(r.date);
    const DatedPoint* u = unemployment.find(r.date);
    if (!v || !u) {
      throw Error(ErrorCode::MisalignedSeries,
                  r.date.to_string() + " has no " + (v ? unemployment.id : vacancies.id) + " entry");
    }
    dates.push_back(r.date);
    f.push_back(r.f);
    const bool have_theta = v->value && u->value && *u->value > 0.0;
    theta.push_back(have_theta ? *v->value / *u->value : kNaN);
    bad.push_back(!r.ok() || !have_theta);
  }
  auto sample = make_sample(dates, f, theta, windows);
  for (std::size_t i = 0; i < bad.size(); ++i) sample.excluded[i] = sample.excluded[i] || bad[i];
  return sample;
}

EstimationSample make_sample(std::span<const YearMonth> dates, std::span<const double> f,
                             std::span<const double> theta, const RegimeWindows& windows) {
  if (dates.size() != f.size() || dates.size() != theta.size()) {
    throw Error(ErrorCode::MisalignedSeries, "dates, f and theta differ in length");
  }
  EstimationSample s;
  for (std::size_t i = 0; i < dates.size(); ++i) {
    const bool usable = f[i] > 0.0 && theta[i] > 0.0 && std::isfinite(f[i]) && std::isfinite(theta[i]);
    s.dates.push_back(dates[i]);
    s.log_f.push_back(usable ? std::log(f[i]) : kNaN);
    s.log_theta.push_back(usable ? std::log(theta[i]) : kNaN);
    s.g.push_back(windows.in_g(dates[i]) ? 1 : 0);
    s.c.push_back(windows.in_c(dates[i]) ? 1 : 0);
    s.excluded.push_back(!usable);
  }
  return s;
}

ProfiledFit profile_gamma(const EstimationSample& s, double gamma, bool use_dummies) {
  // With an intercept and two disjoint regime dummies the least-squares fit is
  // just the group means of the adjusted response.
  double sum[3] = {0, 0, 0};
  std::size_t n[3] = {0, 0, 0};
  const auto group = [&](std::size_t i) {
    if (!use_dummies) return 0;
    return s.g[i] ? 1 : (s.c[i] ? 2 : 0);
  };
  std::vector<double> y(s.size(), 0.0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.excluded[i]) continue;
    y[i] = s.log_f[i] - s.log_theta[i] + congestion(s.log_theta[i], gamma);
    sum[group(i)] += y[i];
    ++n[group(i)];
  }
  double mean[3];
  for (int k = 0; k < 3; ++k) mean[k] = n[k] ? sum[k] / static_cast<double>(n[k]) : 0.0;

  ProfiledFit fit;
  fit.alpha = mean[0];
  fit.psi = n[1] ? mean[1] - mean[0] : 0.0;
  fit.xi = n[2] ? mean[2] - mean[0] : 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.excluded[i]) continue;
    const double e = y[i] - mean[group(i)];
    fit.ssr += e * e;
  }
  return fit;
}

EstimationResult fit_nls(const EstimationSample& sample, const FitOptions& options) {
  const std::size_t n_used = sample.n_used();
  if (n_used < kMinObservations) {
    throw Error(ErrorCode::TooFewObservations,
                "need at least 10 usable months, have " + std::to_string(n_used));
  }
  EstimationResult out;
  out.use_dummies = options.use_dummies;
  if (options.use_dummies) {
    const auto groups = count_groups(sample);
    if (groups.base == 0 || (groups.g == 0 && groups.c == 0)) {
      throw Error(ErrorCode::RankDeficientDummies,
                  "sample does not span a base regime and at least one shifted regime; "
                  "rerun without dummies");
    }
    if (groups.g == 0) out.warning = "no months in the G window; psi fixed at 0";
    if (groups.c == 0) out.warning = "no months in the C window; xi fixed at 0";
  }

  const auto ssr = [&](double gamma) { return profile_gamma(sample, gamma, options.use_dummies).ssr; };
  if (options.fixed_gamma) {
    if (!(*options.fixed_gamma > 0.0)) {
      throw Error(ErrorCode::InvalidConfig, "fixed gamma must be positive");
    }
    out.gamma = *options.fixed_gamma;
    out.gamma_fixed = true;
  } else {
    const double lo = options.gamma_lo, hi = options.gamma_hi;
    if (!(lo > 0.0 && hi > lo)) throw Error(ErrorCode::InvalidConfig, "bad gamma bracket");
    // Coarse log grid first so that golden section starts on a unimodal piece.
    const int m = std::max(options.coarse_points, 3);
    std::vector<double> grid(m), values(m);
    for (int i = 0; i < m; ++i) {
      grid[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (m - 1));
      values[i] = ssr(grid[i]);
    }
    const int k = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    const double a = grid[std::max(k - 1, 0)];
    const double b = grid[std::min(k + 1, m - 1)];
    const auto best = numeric::golden_section_minimize(ssr, a, b, options.gamma_tol, 500);
    out.gamma = best.x;
    out.iterations = best.iterations + m;
    if (out.gamma - lo < 10.0 * options.gamma_tol || hi - out.gamma < 10.0 * options.gamma_tol) {
      out.at_boundary = true;
      out.warning = std::string(to_string(ErrorCode::NoInteriorMinimum)) +
                    ": SSR is smallest at the edge of the gamma bracket";
    }
  }

  const auto fit = profile_gamma(sample, out.gamma, options.use_dummies);
  out.alpha = fit.alpha;
  out.psi = fit.psi;
  out.xi = fit.xi;
  out.ssr = fit.ssr;
  out.n_obs = n_used;
  out.residuals.assign(sample.size(), kNaN);
  double smear = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (sample.excluded[i]) continue;
    const double shift = options.use_dummies ? fit.psi * sample.g[i] + fit.xi * sample.c[i] : 0.0;
    const double e = sample.log_f[i] -
                     (fit.alpha + sample.log_theta[i] -
                      congestion(sample.log_theta[i], out.gamma) + shift);
    out.residuals[i] = e;
    smear += std::exp(e);
  }
  out.smear_factor = smear / static_cast<double>(n_used);
  return out;
}

double log_predict(const EstimationResult& fit, double theta, Regime regime) {
  const double lt = std::log(theta);
  double shift = 0.0;
  if (regime == Regime::GreatRecession) shift = fit.psi;
  if (regime == Regime::Covid) shift = fit.xi;
  return fit.alpha + shift + lt - congestion(lt, fit.gamma);
}

double naive_predict(const EstimationResult& fit, double theta, Regime regime) {
  return std::exp(log_predict(fit, theta, regime));
}

double smear_predict(const EstimationResult& fit, double theta, Regime regime) {
  return naive_predict(fit, theta, regime) * fit.smear_factor;
}

std::vector<double> elasticity_series(double gamma, std::span<const double> theta) {
  std::vector<double> out;
  out.reserve(theta.size());
  for (const double t : theta) out.push_back(1.0 / (1.0 + std::pow(t, -gamma)));
  return out;
}

std::vector<double> bound_series(double gamma, std::span<const double> theta) {
  auto out = elasticity_series(gamma, theta);
  for (double& eta : out) eta = std::max(1.0 / eta, 1.0 / (1.0 - eta));
  return out;
}

}  // namespace jobcost
