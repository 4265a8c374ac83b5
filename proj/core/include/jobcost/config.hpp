#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "jobcost/calendar.hpp"
#include "jobcost/calibration.hpp"
#include "jobcost/estimation.hpp"
#include "jobcost/model.hpp"

namespace jobcost {

struct SweepSettings {
  double y_min = 0.97;
  double y_max = 1.03;
  double step = 0.001;
};

/// Grid for the two wage curves in theta-w space.
struct WageCurveSettings {
  double theta_min = 0.05;
  double theta_max = 2.0;
  int points = 196;
  double ell = kHighFixedCost / 2.0;  // worker-paid cost for the shifted curve
};

struct RunSettings {
  MonthlyTargets targets;
  double gamma = 0.103;
  MatchingTech::Family family = MatchingTech::Family::DenHaanRameyWatson;
  std::vector<EconomyPreset> economies = default_presets();
  SweepSettings sweep;
  WageCurveSettings wage_curves;
  double literature_gamma = 1.27;
  MonthRange range;
  RegimeWindows regimes;
  FitOptions fit;
  std::filesystem::path data_dir = "data/fred";
  std::filesystem::path cache_dir = "cache";
  int stale_after_days = 30;

  MatchingTech technology() const;
};

/// JSON with optional keys targets, gamma, matching, economies[], sweep,
/// wage_curves, literature_gamma, range, regimes, estimation, data. Anything
/// missing keeps its default; unknown keys are rejected. Errors are
/// Error(InvalidConfig) with the source name and, for syntax errors, line and
/// column.
RunSettings parse_settings(std::string_view json_text, const std::string& source = "<config>");
RunSettings load_settings(const std::filesystem::path& path);

}  // namespace jobcost
