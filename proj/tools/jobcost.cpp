// jobcost command-line driver: writes the model table and figure data as CSV.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "jobcost/calibration.hpp"
#include "jobcost/config.hpp"
#include "jobcost/data_io.hpp"
#include "jobcost/decomposition.hpp"
#include "jobcost/equilibrium.hpp"
#include "jobcost/errors.hpp"
#include "jobcost/estimation.hpp"
#include "jobcost/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace jobcost;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 2;
constexpr int kExitNumeric = 3;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::InvalidConfig:
    case ErrorCode::MalformedHeader:
    case ErrorCode::UnparsableRow:
    case ErrorCode::NonMonotoneDates:
    case ErrorCode::NetworkUnavailable:
    case ErrorCode::RangeNotCovered:
    case ErrorCode::MisalignedSeries:
    case ErrorCode::TooFewObservations:
    case ErrorCode::InvalidCalibration:
      return kExitData;
    default:
      return kExitNumeric;
  }
}

std::string num(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string num(const std::optional<double>& x) { return x ? num(*x) : ""; }

// Flags can contain commas; quote them.
std::string text_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct Csv {
  std::vector<std::string> columns;
  std::map<std::string, std::string> units;
  std::vector<std::vector<std::string>> rows;

  void add(std::string name, std::string unit) {
    units[name] = std::move(unit);
    columns.push_back(std::move(name));
  }
};

struct Context {
  RunSettings settings;
  fs::path out_dir = "out";
  bool offline = false;
  std::string config_source = "built-in defaults";
};

void write_csv(const Context& ctx, const std::string& name, const Csv& csv, ordered_json extra = {}) {
  fs::create_directories(ctx.out_dir);
  {
    std::ofstream out(ctx.out_dir / name, std::ios::trunc);
    for (std::size_t i = 0; i < csv.columns.size(); ++i) out << (i ? "," : "") << csv.columns[i];
    out << '\n';
    for (const auto& row : csv.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
      out << '\n';
    }
  }
  // provenance lives beside the data so the CSV stays byte-stable
  ordered_json meta;
  meta["file"] = name;
  meta["config"] = ctx.config_source;
  meta["days_per_month"] = ctx.settings.targets.days_per_month;
  meta["gamma"] = ctx.settings.gamma;
  ordered_json units = ordered_json::object();
  for (const auto& c : csv.columns) units[c] = csv.units.at(c);
  meta["units"] = units;
  for (auto& [k, v] : extra.items()) meta[k] = v;
  std::ofstream(ctx.out_dir / (name + ".meta.json"), std::ios::trunc) << meta.dump(2) << '\n';
  std::cout << "wrote " << (ctx.out_dir / name).string() << '\n';
}

MatchingTech technology(const RunSettings& s, double gamma) {
  return calibrate_matching(s.targets, s.family, gamma);
}

// --- table -----------------------------------------------------------------

int cmd_table(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto tech = s.technology();
  std::vector<TableRow> rows;
  for (const auto& preset : s.economies) {
    try {
      auto one = build_table(s.targets, tech, {preset});
      rows.push_back(one.front());
    } catch (const Error& e) {
      std::cerr << "economy " << preset.name << ": " << e.what() << '\n';
      return kExitData;
    }
  }
  Csv csv;
  csv.add("economy", "label");
  csv.add("c", "goods/day");
  csv.add("h", "goods");
  csv.add("ell", "goods");
  csv.add("eta_theta_y", "elasticity");
  csv.add("eta_w_y", "elasticity");
  std::printf("%-10s %12s %8s %8s %12s %10s\n", "economy", "c", "h", "ell", "eta_theta_y", "eta_w_y");
  for (const auto& r : rows) {
    csv.rows.push_back({r.economy, num(r.c), num(r.h), num(r.ell), num(r.eta_theta_y), num(r.eta_w_y)});
    std::printf("%-10s %12.4g %8.3f %8.3f %12.3f %10.3f\n", r.economy.c_str(), r.c, r.h, r.ell,
                r.eta_theta_y, r.eta_w_y);
  }
  ordered_json extra;
  extra["matching"] = tech.describe();
  extra["theta_star"] = s.targets.theta_star;
  write_csv(ctx, "table_model_results.csv", csv, extra);
  return kExitOk;
}

// --- sweep -----------------------------------------------------------------

int cmd_sweep(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto tech = s.technology();
  const auto grid = make_grid(s.sweep.y_min, s.sweep.y_max, s.sweep.step);
  Csv csv;
  csv.add("y", "goods/day");
  std::vector<std::vector<SweepPoint>> columns;
  for (const auto& preset : s.economies) {
    const auto economy = calibrate_economy(s.targets, tech, preset);
    columns.push_back(sweep_y(economy.cal, tech, grid, {}, s.targets.days_per_month));
    csv.add("theta_" + preset.name, "vacancies per unemployed");
    csv.add("u_" + preset.name, "fraction, monthly-equivalent steady state");
    csv.add("flag_" + preset.name, "empty when feasible");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{num(grid[i])};
    for (const auto& col : columns) {
      const auto& p = col[i];
      row.push_back(p.feasible ? num(p.theta) : "");
      row.push_back(p.feasible ? num(p.u_monthly) : "");
      row.push_back(text_field(p.flag));
    }
    csv.rows.push_back(std::move(row));
  }
  write_csv(ctx, "fig_ur_dynamics.csv", csv);
  return kExitOk;
}

// --- bounds ----------------------------------------------------------------

std::pair<double, double> range_of(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return {*lo, *hi};
}

int cmd_bounds(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto tech = technology(s, s.literature_gamma);
  const auto grid = make_grid(s.sweep.y_min, s.sweep.y_max, s.sweep.step);
  Csv by_y;
  by_y.add("y", "goods/day");
  std::vector<std::vector<SweepPoint>> columns;
  for (const auto& preset : s.economies) {
    const auto economy = calibrate_economy(s.targets, tech, preset);
    columns.push_back(sweep_y(economy.cal, tech, grid, {}, s.targets.days_per_month));
    by_y.add("theta_" + preset.name, "vacancies per unemployed");
    by_y.add("bound_" + preset.name, "upper bound on upsilon");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    std::vector<std::string> row{num(grid[i])};
    for (const auto& col : columns) {
      row.push_back(col[i].feasible ? num(col[i].theta) : "");
      row.push_back(col[i].feasible ? num(col[i].bound) : "");
    }
    by_y.rows.push_back(std::move(row));
  }
  ordered_json extra;
  extra["bound_gamma"] = s.literature_gamma;
  write_csv(ctx, "fig_bound_indexed_y.csv", by_y, extra);

  // observed tightness needs the data
  const auto pipeline = run_data_pipeline(s, fetch_options(s, ctx.offline));
  const auto& a = pipeline.assembly;
  std::vector<double> theta;
  Csv csv;
  csv.add("date", "YYYY-MM");
  csv.add("theta", "vacancies per unemployed");
  csv.add("bound_gamma_hat", "upper bound on upsilon");
  csv.add("bound_gamma_literature", "upper bound on upsilon");
  csv.add("bound_cobb_douglas", "upper bound on upsilon");
  for (std::size_t i = 0; i < a.months.size(); ++i) {
    if (!a.theta[i]) {
      csv.rows.push_back({a.months[i].date.to_string(), "", "", "", "2"});
      continue;
    }
    const double t = *a.theta[i];
    theta.push_back(t);
    csv.rows.push_back({a.months[i].date.to_string(), num(t),
                        num(bound_series(s.gamma, std::span(&t, 1)).front()),
                        num(bound_series(s.literature_gamma, std::span(&t, 1)).front()), "2"});
  }
  write_csv(ctx, "fig_bound_tightness.csv", csv, extra);
  const auto [lo_hat, hi_hat] = range_of(bound_series(s.gamma, theta));
  const auto [lo_lit, hi_lit] = range_of(bound_series(s.literature_gamma, theta));
  std::printf("bound range gamma=%.3f: [%.3f, %.3f]\n", s.gamma, lo_hat, hi_hat);
  std::printf("bound range gamma=%.3f: [%.3f, %.3f]\n", s.literature_gamma, lo_lit, hi_lit);
  return kExitOk;
}

// --- adjust ----------------------------------------------------------------

int cmd_adjust(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto pipeline = run_data_pipeline(s, fetch_options(s, ctx.offline));
  if (pipeline.rates.empty()) {
    std::cerr << "no months in range\n";
    return kExitData;
  }
  Csv csv;
  csv.add("date", "YYYY-MM");
  csv.add("s_corrected", "monthly probability");
  csv.add("s_approx", "monthly probability");
  csv.add("s_uncorrected", "monthly probability");
  csv.add("f_corrected", "monthly probability");
  csv.add("f_uncorrected", "hires per unemployed");
  csv.add("varsigma", "Poisson rate per month");
  csv.add("varphi", "Poisson rate per month");
  csv.add("flag", "empty when solved");
  for (const auto& r : pipeline.rates) {
    csv.rows.push_back({r.date.to_string(), num(r.s), num(r.s_approx), num(r.s_uncorrected), num(r.f),
                        num(r.f_uncorrected), num(r.varsigma), num(r.varphi), text_field(r.flag)});
  }
  write_csv(ctx, "flows_adjusted.csv", csv);
  const double share = static_cast<double>(pipeline.solved_months) / pipeline.rates.size();
  std::printf("%zu of %zu months solved\n", pipeline.solved_months, pipeline.rates.size());
  if (share < 0.5) {
    std::cerr << "fewer than half of the months could be corrected\n";
    return kExitData;
  }
  return kExitOk;
}

// --- estimate --------------------------------------------------------------

int cmd_estimate(const Context& ctx, std::optional<double> gamma_fixed, bool no_dummies) {
  const auto& s = ctx.settings;
  const auto pipeline = run_data_pipeline(s, fetch_options(s, ctx.offline));
  FitOptions options = s.fit;
  options.fixed_gamma = gamma_fixed;
  if (no_dummies) options.use_dummies = false;
  EstimationResult fit;
  try {
    fit = fit_nls(pipeline.sample, options);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitNumeric;
  }
  if (!fit.warning.empty()) std::cerr << "warning: " << fit.warning << '\n';

  const auto& sample = pipeline.sample;
  std::vector<double> theta_used;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    if (!sample.excluded[i]) theta_used.push_back(std::exp(sample.log_theta[i]));
  }
  const auto eta = elasticity_series(fit.gamma, theta_used);
  const auto [eta_lo, eta_hi] = range_of(eta);
  const auto bounds = bound_series(fit.gamma, theta_used);
  const auto [b_lo, b_hi] = range_of(bounds);

  ordered_json j;
  j["alpha"] = fit.alpha;
  j["gamma"] = fit.gamma;
  j["psi"] = fit.psi;
  j["xi"] = fit.xi;
  j["ssr"] = fit.ssr;
  j["smear_factor"] = fit.smear_factor;
  j["n_obs"] = fit.n_obs;
  j["use_dummies"] = fit.use_dummies;
  j["gamma_fixed"] = fit.gamma_fixed;
  j["at_boundary"] = fit.at_boundary;
  j["warning"] = fit.warning;
  j["eta_range"] = {eta_lo, eta_hi};
  j["bound_range"] = {b_lo, b_hi};
  j["range"] = s.range.first.to_string() + ":" + s.range.last.to_string();
  fs::create_directories(ctx.out_dir);
  std::ofstream(ctx.out_dir / "estimation.json", std::ios::trunc) << j.dump(2) << '\n';
  std::cout << "wrote " << (ctx.out_dir / "estimation.json").string() << '\n';
  std::printf("gamma=%.4f alpha=%.4f psi=%.4f xi=%.4f ssr=%.5g n=%zu smear=%.5f\n", fit.gamma, fit.alpha,
              fit.psi, fit.xi, fit.ssr, fit.n_obs, fit.smear_factor);
  std::printf("eta range [%.3f, %.3f], bound range [%.3f, %.3f]\n", eta_lo, eta_hi, b_lo, b_hi);

  Csv find, tight, ltight, elast, bound, bound_hi;
  find.add("date", "YYYY-MM");
  find.add("f_corrected", "monthly probability");
  find.add("f_naive", "monthly probability");
  find.add("f_smeared", "monthly probability");
  find.add("excluded", "1 when masked");
  tight.add("theta", "vacancies per unemployed");
  tight.add("f_corrected", "monthly probability");
  tight.add("f_smeared", "monthly probability");
  tight.add("date", "YYYY-MM");
  ltight.add("theta", "vacancies per unemployed");
  ltight.add("log_f", "log monthly probability");
  ltight.add("log_f_fitted", "log monthly probability");
  ltight.add("date", "YYYY-MM");
  elast.add("date", "YYYY-MM");
  elast.add("theta", "vacancies per unemployed");
  elast.add("eta", "elasticity of matches w.r.t. u");
  bound.add("date", "YYYY-MM");
  bound.add("theta", "vacancies per unemployed");
  bound.add("bound", "upper bound on upsilon");
  bound_hi.add("date", "YYYY-MM");
  bound_hi.add("theta", "vacancies per unemployed");
  bound_hi.add("bound_gamma_hat", "upper bound on upsilon");
  bound_hi.add("bound_gamma_literature", "upper bound on upsilon");

  for (std::size_t i = 0; i < sample.size(); ++i) {
    const auto date = sample.dates[i].to_string();
    const double theta = std::exp(sample.log_theta[i]);
    const bool have_theta = std::isfinite(theta);
    const auto regime = regime_of(sample.dates[i], s.regimes);
    const double f = std::exp(sample.log_f[i]);
    const std::string naive = have_theta ? num(naive_predict(fit, theta, regime)) : "";
    const std::string smeared = have_theta ? num(smear_predict(fit, theta, regime)) : "";
    find.rows.push_back({date, num(f), naive, smeared, sample.excluded[i] ? "1" : "0"});
    if (sample.excluded[i] || !have_theta) continue;
    tight.rows.push_back({num(theta), num(f), smeared, date});
    ltight.rows.push_back({num(theta), num(sample.log_f[i]), num(log_predict(fit, theta, regime)), date});
    const double eta_t = elasticity_series(fit.gamma, std::span(&theta, 1)).front();
    const double b = bound_series(fit.gamma, std::span(&theta, 1)).front();
    const double b_lit = bound_series(s.literature_gamma, std::span(&theta, 1)).front();
    elast.rows.push_back({date, num(theta), num(eta_t)});
    bound.rows.push_back({date, num(theta), num(b)});
    bound_hi.rows.push_back({date, num(theta), num(b), num(b_lit)});
  }
  ordered_json extra;
  extra["gamma_hat"] = fit.gamma;
  extra["literature_gamma"] = s.literature_gamma;
  write_csv(ctx, "fig_estimated_find.csv", find, extra);
  write_csv(ctx, "fig_tight_vs_find.csv", tight, extra);
  write_csv(ctx, "fig_tight_vs_lfind.csv", ltight, extra);
  write_csv(ctx, "fig_elasticity_matching.csv", elast, extra);
  write_csv(ctx, "fig_bound.csv", bound, extra);
  write_csv(ctx, "fig_bound_hi.csv", bound_hi, extra);
  return kExitOk;
}

// --- calibrate / solve / curves --------------------------------------------

int cmd_calibrate(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto tech = s.technology();
  const auto daily = monthly_to_daily(s.targets);
  const auto base = base_calibration(s.targets);
  ordered_json j;
  j["days_per_month"] = s.targets.days_per_month;
  j["r"] = daily.r;
  j["s"] = daily.s;
  j["f"] = daily.f;
  j["beta"] = base.beta();
  j["matching"] = tech.describe();
  j["efficiency"] = tech.efficiency();
  j["q_at_theta_star"] = tech.q(s.targets.theta_star);
  j["implied_unemployment"] = implied_unemployment(s.targets);
  j["h_max"] = solve_h_max(base, tech, s.targets.theta_star);
  ordered_json list = ordered_json::array();
  for (const auto& preset : s.economies) {
    const auto e = calibrate_economy(s.targets, tech, preset);
    list.push_back({{"name", e.name}, {"c", e.cal.c}, {"h", e.cal.h}, {"ell", e.cal.ell},
                    {"uniqueness", std::string(to_string(uniqueness_class(e.cal)))}});
  }
  j["economies"] = list;
  fs::create_directories(ctx.out_dir);
  std::ofstream(ctx.out_dir / "calibration.json", std::ios::trunc) << j.dump(2) << '\n';
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

struct SolveArgs {
  std::string economy = "Baseline";
  std::optional<double> y, h, ell, c, tau;
};

int cmd_solve(const Context& ctx, const SolveArgs& args) {
  const auto& s = ctx.settings;
  const auto tech = s.technology();
  const EconomyPreset* preset = nullptr;
  for (const auto& p : s.economies) {
    if (p.name == args.economy) preset = &p;
  }
  if (!preset) {
    std::cerr << "unknown economy " << args.economy << '\n';
    return kExitData;
  }
  auto cal = calibrate_economy(s.targets, tech, *preset).cal;
  if (args.y) cal.y = *args.y;
  if (args.h) cal.h = *args.h;
  if (args.ell) cal.ell = *args.ell;
  if (args.c) cal.c = *args.c;
  if (args.tau) cal.tau = *args.tau;
  const auto report = solve_theta(cal, tech);
  const double w = wage_firm_side(cal, tech, report.theta_star);
  ordered_json j;
  j["economy"] = args.economy;
  j["y"] = cal.y;
  j["c"] = cal.c;
  j["h"] = cal.h;
  j["ell"] = cal.ell;
  j["tau"] = cal.tau;
  j["theta"] = report.theta_star;
  j["u"] = steady_state_unemployment(cal.s, tech.f(report.theta_star));
  j["u_monthly"] = steady_state_unemployment_over(cal.s, tech.f(report.theta_star), s.targets.days_per_month);
  j["w"] = w;
  j["theta_bar"] = report.theta_bar;
  j["uniqueness"] = std::string(to_string(report.uniqueness));
  j["sign_changes"] = report.sign_changes;
  j["t_prime_range"] = {report.t_prime_min, report.t_prime_max};
  j["iterations"] = report.iterations;
  j["residual"] = report.residual;
  std::cout << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_curves(const Context& ctx) {
  const auto& s = ctx.settings;
  const auto tech = s.technology();
  const auto base = calibrate_economy(s.targets, tech, {"Baseline", 0.0, 0.0, std::nullopt}).cal;
  Calibration with_ell = base;
  with_ell.ell = s.wage_curves.ell;
  Csv csv;
  csv.add("theta", "vacancies per unemployed");
  csv.add("w_firm", "goods/day");
  csv.add("w_worker", "goods/day");
  csv.add("w_worker_ell", "goods/day");
  const auto& g = s.wage_curves;
  for (int i = 0; i < g.points; ++i) {
    const double theta = g.theta_min + (g.theta_max - g.theta_min) * i / (g.points - 1);
    csv.rows.push_back({num(theta), num(wage_firm_side(base, tech, theta)),
                        num(wage_worker_side(base, tech, theta)),
                        num(wage_worker_side(with_ell, tech, theta))});
  }
  ordered_json extra;
  extra["c"] = base.c;
  extra["ell"] = g.ell;
  write_csv(ctx, "fig_w_tight.csv", csv, extra);
  return kExitOk;
}

// --- fetch -----------------------------------------------------------------

int cmd_fetch(const Context& ctx, bool to_snapshot) {
  const auto& s = ctx.settings;
  auto options = fetch_options(s, ctx.offline);
  options.refresh = true;
  options.warn = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };
  for (const auto& spec : known_series()) {
    const auto r = fetch_series(spec, options);
    std::printf("%-9s %zu points %s..%s from %s\n", std::string(spec.fred_id).c_str(),
                r.series.points.size(), r.series.first().to_string().c_str(),
                r.series.last().to_string().c_str(), r.source.c_str());
    if (to_snapshot) {
      fs::create_directories(s.data_dir);
      std::ofstream(s.data_dir / (std::string(spec.fred_id) + ".csv"), std::ios::trunc)
          << write_fred_csv(r.series);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Job-creation costs and unemployment volatility: table and figure data"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, out_dir = "out", range, data_dir, cache_dir;
  bool offline = false;
  std::optional<double> gamma;
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_flag("--offline", offline, "never touch the network");
  app.add_option("--gamma", gamma, "override the matching-function gamma");
  app.add_option("--range", range, "month range YYYY-MM:YYYY-MM");
  app.add_option("--data-dir", data_dir, "directory with the pinned FRED snapshot");
  app.add_option("--cache-dir", cache_dir, "download cache directory");

  auto* table = app.add_subcommand("table", "model results for each cost mix");
  auto* sweep = app.add_subcommand("sweep", "steady-state unemployment over a productivity grid");
  auto* bounds = app.add_subcommand("bounds", "upper bounds on upsilon by economy and by observed tightness");
  auto* adjust = app.add_subcommand("adjust", "time-aggregation correction of monthly flows");
  auto* estimate = app.add_subcommand("estimate", "nonlinear least squares fit of the matching function");
  auto* calibrate = app.add_subcommand("calibrate", "daily parameters and solved costs");
  auto* solve = app.add_subcommand("solve", "equilibrium tightness for one economy");
  auto* curves = app.add_subcommand("curves", "firm-side and worker-side wage curves");
  auto* fetch = app.add_subcommand("fetch", "download the five FRED series into the cache");

  std::optional<double> gamma_fixed;
  bool no_dummies = false;
  estimate->add_option("--gamma-fixed", gamma_fixed, "skip the gamma search");
  estimate->add_flag("--no-dummies", no_dummies, "drop the regime shifters");

  SolveArgs solve_args;
  solve->add_option("--economy", solve_args.economy, "preset name")->capture_default_str();
  solve->add_option("--y", solve_args.y, "productivity");
  solve->add_option("--hiring-cost", solve_args.h, "firm-paid hiring cost");
  solve->add_option("--ell", solve_args.ell, "worker-paid cost");
  solve->add_option("--c", solve_args.c, "vacancy cost (default: solved from the preset)");
  solve->add_option("--tau", solve_args.tau, "layoff tax");

  bool to_snapshot = false;
  fetch->add_flag("--snapshot", to_snapshot, "also write the downloads into the snapshot directory");

  CLI11_PARSE(app, argc, argv);

  Context ctx;
  ctx.out_dir = out_dir;
  ctx.offline = offline;
  try {
    if (!config_path.empty()) {
      if (!fs::exists(config_path)) {
        std::cerr << "config file not found: " << config_path << '\n';
        return kExitData;
      }
      ctx.settings = load_settings(config_path);
      ctx.config_source = config_path;
    }
    if (gamma) {
      if (!(*gamma > 0.0)) throw Error(ErrorCode::InvalidConfig, "--gamma must be positive");
      ctx.settings.gamma = *gamma;
    }
    if (!range.empty()) ctx.settings.range = MonthRange::parse(range);
    if (!data_dir.empty()) ctx.settings.data_dir = data_dir;
    if (!cache_dir.empty()) ctx.settings.cache_dir = cache_dir;

    if (*table) return cmd_table(ctx);
    if (*sweep) return cmd_sweep(ctx);
    if (*bounds) return cmd_bounds(ctx);
    if (*adjust) return cmd_adjust(ctx);
    if (*estimate) return cmd_estimate(ctx, gamma_fixed, no_dummies);
    if (*calibrate) return cmd_calibrate(ctx);
    if (*solve) return cmd_solve(ctx, solve_args);
    if (*curves) return cmd_curves(ctx);
    if (*fetch) return cmd_fetch(ctx, to_snapshot);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}
