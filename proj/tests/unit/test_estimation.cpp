#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "jobcost/errors.hpp"
#include "jobcost/estimation.hpp"
#include "synthetic.hpp"

using namespace jobcost;
using jobcost::testing::SyntheticTruth;
using jobcost::testing::synthetic_sample;

namespace {

const MonthRange kRange{{2000, 12}, {2023, 5}};

double direct_ssr(const EstimationSample& s, double alpha, double gamma, double psi, double xi) {
  double out = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s.excluded[i]) continue;
    const double th = std::exp(s.log_theta[i]);
    const double pred = alpha + std::log(th) - std::log(1 + std::pow(th, gamma)) / gamma + psi * s.g[i] + xi * s.c[i];
    out += (s.log_f[i] - pred) * (s.log_f[i] - pred);
  }
  return out;
}

}  // namespace

TEST(Regimes, Dummies) {
  const RegimeWindows w;
  EXPECT_EQ(regime_of({2010, 6}, w), Regime::GreatRecession);
  EXPECT_EQ(regime_of({2005, 1}, w), Regime::Base);
  EXPECT_EQ(regime_of({2021, 3}, w), Regime::Covid);
  EXPECT_EQ(regime_of({2007, 11}, w), Regime::Base);
  EXPECT_EQ(regime_of({2007, 12}, w), Regime::GreatRecession);
  EXPECT_EQ(regime_of({2020, 1}, w), Regime::GreatRecession);
  EXPECT_EQ(regime_of({2020, 2}, w), Regime::Covid);

  const std::vector<YearMonth> d{{2010, 6}, {2005, 1}, {2021, 3}};
  const std::vector<double> f{0.5, 0.5, 0.5}, th{1, 1, 1};
  const auto s = make_sample(d, f, th, w);
  EXPECT_EQ(s.g, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(s.c, (std::vector<int>{0, 0, 1}));
}

TEST(Fit, ZeroNoiseRecovery) {
  const SyntheticTruth truth;
  const auto s = synthetic_sample(kRange, truth);
  ASSERT_EQ(s.size(), 270u);
  const auto fit = fit_nls(s);
  EXPECT_NEAR(fit.gamma, truth.gamma, 1e-6);
  EXPECT_NEAR(fit.alpha, truth.alpha, 1e-6);
  EXPECT_NEAR(fit.psi, truth.psi, 1e-6);
  EXPECT_NEAR(fit.xi, truth.xi, 1e-6);
  EXPECT_LT(fit.ssr, 1e-12);
  EXPECT_FALSE(fit.at_boundary);
  EXPECT_NEAR(fit.smear_factor, 1.0, 1e-9);
  EXPECT_NEAR(smear_predict(fit, 0.7), naive_predict(fit, 0.7), 1e-9);
}

TEST(Fit, RecoversOtherTruths) {
  for (double g : {0.407, 1.27, 1.553}) {
    SyntheticTruth t;
    t.gamma = g;
    const auto fit = fit_nls(synthetic_sample(kRange, t));
    EXPECT_NEAR(fit.gamma, g, 1e-5) << g;
  }
}

TEST(Fit, MonteCarlo) {
  std::vector<double> err;
  for (int rep = 0; rep < 100; ++rep) {
    SyntheticTruth t;
    t.sigma = 0.05;
    t.seed = 1000 + rep;
    const auto fit = fit_nls(synthetic_sample(kRange, t));
    err.push_back(std::abs(fit.gamma - t.gamma));
  }
  std::nth_element(err.begin(), err.begin() + 50, err.end());
  EXPECT_LT(err[50], 0.05);
}

TEST(Fit, ProfileOptimality) {
  SyntheticTruth t;
  t.sigma = 0.05;
  const auto s = synthetic_sample(kRange, t);
  const auto fit = fit_nls(s);
  const auto at = [&](double g) { return profile_gamma(s, g, true).ssr; };
  EXPECT_LE(fit.ssr, at(fit.gamma * 1.01));
  EXPECT_LE(fit.ssr, at(fit.gamma * 0.99));
  EXPECT_NEAR(fit.ssr, direct_ssr(s, fit.alpha, fit.gamma, fit.psi, fit.xi), 1e-12);

  // normal equations: residuals orthogonal to the constant and both dummies
  double sum = 0, sum_g = 0, sum_c = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    sum += fit.residuals[i];
    sum_g += fit.residuals[i] * s.g[i];
    sum_c += fit.residuals[i] * s.c[i];
  }
  EXPECT_NEAR(sum, 0.0, 1e-10);
  EXPECT_NEAR(sum_g, 0.0, 1e-10);
  EXPECT_NEAR(sum_c, 0.0, 1e-10);

  // small moves in the linear coefficients only raise SSR
  for (double d : {-1e-4, 1e-4}) {
    EXPECT_GT(direct_ssr(s, fit.alpha + d, fit.gamma, fit.psi, fit.xi), fit.ssr);
    EXPECT_GT(direct_ssr(s, fit.alpha, fit.gamma, fit.psi + d, fit.xi), fit.ssr);
    EXPECT_GT(direct_ssr(s, fit.alpha, fit.gamma, fit.psi, fit.xi + d), fit.ssr);
  }
}

TEST(Fit, DummiesNeverHurt) {
  SyntheticTruth t;
  t.sigma = 0.05;
  const auto s = synthetic_sample(kRange, t);
  FitOptions plain;
  plain.use_dummies = false;
  const auto a = fit_nls(s);
  const auto b = fit_nls(s, plain);
  EXPECT_LE(a.ssr, b.ssr);
  EXPECT_FALSE(b.use_dummies);
  double sum = 0;
  for (double e : b.residuals) sum += e;
  EXPECT_NEAR(sum, 0.0, 1e-10);
}

TEST(Fit, ScaleInvariance) {
  // scaling unemployment and vacancies together leaves theta, hence the fit, alone
  SyntheticTruth t;
  t.sigma = 0.03;
  const auto set = jobcost::testing::synthetic_series(kRange, t);
  auto scaled_v = set.vacancies, scaled_u = set.unemployment;
  for (auto& p : scaled_v.points) *p.value *= 3.7;
  for (auto& p : scaled_u.points) *p.value *= 3.7;
  std::vector<FlowRates> rates;
  for (long i = 0; i < kRange.size(); ++i) {
    FlowRates r;
    r.date = YearMonth::from_ordinal(kRange.first.ordinal() + i);
    r.f = 0.3 + 0.2 * std::sin(i * 0.1);
    rates.push_back(r);
  }
  const auto a = fit_nls(build_sample(rates, set.vacancies, set.unemployment));
  const auto b = fit_nls(build_sample(rates, scaled_v, scaled_u));
  EXPECT_NEAR(a.gamma, b.gamma, 1e-9);
  EXPECT_NEAR(a.alpha, b.alpha, 1e-9);
}

TEST(Fit, FixedGamma) {
  const auto s = synthetic_sample(kRange, SyntheticTruth{});
  FitOptions o;
  o.fixed_gamma = 1.27;
  const auto fit = fit_nls(s, o);
  EXPECT_TRUE(fit.gamma_fixed);
  EXPECT_DOUBLE_EQ(fit.gamma, 1.27);
  EXPECT_GT(fit.ssr, 0.0);
}

TEST(Fit, Errors) {
  const auto s = synthetic_sample(MonthRange{{2001, 1}, {2001, 6}}, SyntheticTruth{});
  try {
    fit_nls(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooFewObservations);
  }
  // every month in the base regime: no dummy can be identified
  const auto base_only = synthetic_sample(MonthRange{{2001, 1}, {2004, 12}}, SyntheticTruth{});
  try {
    fit_nls(base_only);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficientDummies);
  }
  FitOptions plain;
  plain.use_dummies = false;
  EXPECT_NO_THROW(fit_nls(base_only, plain));
}

TEST(Fit, MissingCovidWindowWarns) {
  const auto s = synthetic_sample(MonthRange{{2000, 12}, {2019, 12}}, SyntheticTruth{});
  const auto fit = fit_nls(s);
  EXPECT_EQ(fit.xi, 0.0);
  EXPECT_FALSE(fit.warning.empty());
  EXPECT_NEAR(fit.gamma, 0.103, 1e-6);
}

TEST(Fit, BoundaryIsReported) {
  SyntheticTruth t;
  t.gamma = 8.0;
  const auto fit = fit_nls(synthetic_sample(kRange, t));
  EXPECT_TRUE(fit.at_boundary);
  EXPECT_NE(fit.warning.find("NoInteriorMinimum"), std::string::npos);
}

TEST(Fit, ExcludedRowsIgnored) {
  auto s = synthetic_sample(kRange, SyntheticTruth{});
  s.log_f[5] += 3.0;
  s.excluded[5] = true;
  const auto fit = fit_nls(s);
  EXPECT_NEAR(fit.gamma, 0.103, 1e-6);
  EXPECT_TRUE(std::isnan(fit.residuals[5]));
  EXPECT_EQ(fit.n_obs, 269u);
}

TEST(Smearing, SymmetricResiduals) {
  // residuals +-0.1 alternating, zero-sum inside every regime, gamma held fixed
  const auto theta = jobcost::testing::tightness_path(kRange, 3);
  std::vector<YearMonth> dates;
  std::vector<double> f;
  YearMonth m = kRange.first;
  for (std::size_t i = 0; i < theta.size(); ++i, m = m.next()) {
    dates.push_back(m);
    const double base = std::exp(-0.5 + std::log(theta[i]) - std::log1p(std::pow(theta[i], 0.103)) / 0.103);
    f.push_back(base * std::exp(i % 2 ? -0.1 : 0.1));
  }
  const auto s = make_sample(dates, f, theta);
  FitOptions o;
  o.fixed_gamma = 0.103;
  const auto fit = fit_nls(s, o);
  EXPECT_NEAR(fit.smear_factor, std::cosh(0.1), 1e-12);
  EXPECT_NEAR(fit.smear_factor, 1.0050, 1e-4);
  EXPECT_NEAR(smear_predict(fit, 0.5) / naive_predict(fit, 0.5), std::cosh(0.1), 1e-12);
}

TEST(Predict, LogAndLevelAgree) {
  EstimationResult fit;
  fit.alpha = -0.4;
  fit.gamma = 0.5;
  fit.psi = -0.1;
  fit.xi = -0.3;
  for (auto r : {Regime::Base, Regime::GreatRecession, Regime::Covid}) {
    EXPECT_NEAR(std::log(naive_predict(fit, 0.8, r)), log_predict(fit, 0.8, r), 1e-14);
  }
  EXPECT_NEAR(naive_predict(fit, 0.8, Regime::Covid) / naive_predict(fit, 0.8), std::exp(-0.3), 1e-14);
}

TEST(Elasticity, Values) {
  const std::vector<double> one{1.0}, th{0.72};
  for (double g : {0.103, 0.5, 1.27, 3.0}) {
    EXPECT_DOUBLE_EQ(elasticity_series(g, one)[0], 0.5);
    EXPECT_DOUBLE_EQ(bound_series(g, one)[0], 2.0);
  }
  // 0.72^1.27 / (1 + 0.72^1.27) = 0.39719
  const double eta = elasticity_series(1.27, th)[0];
  EXPECT_NEAR(eta, std::exp(1.27 * std::log(0.72)) / (1 + std::exp(1.27 * std::log(0.72))), 1e-15);
  EXPECT_NEAR(eta, 0.398, 1e-3);
  EXPECT_NEAR(bound_series(1.27, th)[0], 1.0 / eta, 1e-14);
  // bound never below two
  for (double x = 0.05; x < 5; x *= 1.3) EXPECT_GE(bound_series(0.7, std::vector<double>{x})[0], 2.0);
}
