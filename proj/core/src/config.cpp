#include "jobcost/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "jobcost/errors.hpp"

namespace jobcost {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw Error(ErrorCode::InvalidConfig, source + ": " + what);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& source, const std::string& where) {
  if (!obj.is_object()) fail(source, where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.count(key)) fail(source, "unknown key '" + key + "' in " + where);
  }
}

template <class T>
void read(const json& obj, const char* key, T& into, const std::string& source) {
  if (!obj.contains(key)) return;
  try {
    into = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    fail(source, std::string("bad value for '") + key + "': " + e.what());
  }
}

YearMonth read_month(const json& obj, const char* key, YearMonth fallback, const std::string& source) {
  if (!obj.contains(key)) return fallback;
  std::string text;
  read(obj, key, text, source);
  return YearMonth::parse(text);
}

}  // namespace

MatchingTech RunSettings::technology() const { return calibrate_matching(targets, family, gamma); }

RunSettings parse_settings(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports a byte offset; turn it into line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(source, "syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }

  RunSettings s;
  check_keys(doc, {"targets", "gamma", "matching", "economies", "sweep", "wage_curves",
                   "literature_gamma", "range", "regimes", "estimation", "data"},
             source, "top level");

  if (doc.contains("targets")) {
    const auto& t = doc["targets"];
    check_keys(t, {"theta_star", "f_monthly", "r_monthly", "s_monthly", "days_per_month", "z", "y", "phi"},
               source, "targets");
    read(t, "theta_star", s.targets.theta_star, source);
    read(t, "f_monthly", s.targets.f_monthly, source);
    read(t, "r_monthly", s.targets.r_monthly, source);
    read(t, "s_monthly", s.targets.s_monthly, source);
    read(t, "days_per_month", s.targets.days_per_month, source);
    read(t, "z", s.targets.z, source);
    read(t, "y", s.targets.y, source);
    read(t, "phi", s.targets.phi, source);
  }
  read(doc, "gamma", s.gamma, source);
  if (!(s.gamma > 0.0)) fail(source, "gamma must be positive");
  if (doc.contains("matching")) {
    std::string family;
    read(doc, "matching", family, source);
    if (family == "drw") s.family = MatchingTech::Family::DenHaanRameyWatson;
    else if (family == "cobb_douglas") s.family = MatchingTech::Family::CobbDouglas;
    else fail(source, "matching must be \"drw\" or \"cobb_douglas\"");
  }

  if (doc.contains("economies")) {
    const auto& list = doc["economies"];
    if (!list.is_array() || list.empty()) fail(source, "economies must be a non-empty array");
    s.economies.clear();
    for (const auto& e : list) {
      check_keys(e, {"name", "h", "ell", "c"}, source, "economies[]");
      EconomyPreset p;
      read(e, "name", p.name, source);
      if (p.name.empty()) fail(source, "every economy needs a name");
      read(e, "h", p.h, source);
      read(e, "ell", p.ell, source);
      if (e.contains("c") && !e["c"].is_null()) {
        double c = 0.0;
        read(e, "c", c, source);
        p.c = c;
      }
      s.economies.push_back(p);
    }
  }

  if (doc.contains("sweep")) {
    const auto& w = doc["sweep"];
    check_keys(w, {"y_min", "y_max", "step"}, source, "sweep");
    read(w, "y_min", s.sweep.y_min, source);
    read(w, "y_max", s.sweep.y_max, source);
    read(w, "step", s.sweep.step, source);
    if (!(s.sweep.step > 0.0 && s.sweep.y_max >= s.sweep.y_min)) fail(source, "bad sweep grid");
  }
  if (doc.contains("wage_curves")) {
    const auto& w = doc["wage_curves"];
    check_keys(w, {"theta_min", "theta_max", "points", "ell"}, source, "wage_curves");
    read(w, "theta_min", s.wage_curves.theta_min, source);
    read(w, "theta_max", s.wage_curves.theta_max, source);
    read(w, "points", s.wage_curves.points, source);
    read(w, "ell", s.wage_curves.ell, source);
    if (!(s.wage_curves.theta_min > 0.0 && s.wage_curves.theta_max > s.wage_curves.theta_min &&
          s.wage_curves.points >= 2)) {
      fail(source, "bad wage_curves grid");
    }
  }
  read(doc, "literature_gamma", s.literature_gamma, source);
  if (doc.contains("range")) {
    std::string text;
    read(doc, "range", text, source);
    s.range = MonthRange::parse(text);
  }
  if (doc.contains("regimes")) {
    const auto& r = doc["regimes"];
    check_keys(r, {"g_first", "g_last", "c_first"}, source, "regimes");
    s.regimes.g_first = read_month(r, "g_first", s.regimes.g_first, source);
    s.regimes.g_last = read_month(r, "g_last", s.regimes.g_last, source);
    s.regimes.c_first = read_month(r, "c_first", s.regimes.c_first, source);
  }
  if (doc.contains("estimation")) {
    const auto& e = doc["estimation"];
    check_keys(e, {"gamma_lo", "gamma_hi", "gamma_tol", "coarse_points", "use_dummies"}, source,
               "estimation");
    read(e, "gamma_lo", s.fit.gamma_lo, source);
    read(e, "gamma_hi", s.fit.gamma_hi, source);
    read(e, "gamma_tol", s.fit.gamma_tol, source);
    read(e, "coarse_points", s.fit.coarse_points, source);
    read(e, "use_dummies", s.fit.use_dummies, source);
  }
  if (doc.contains("data")) {
    const auto& d = doc["data"];
    check_keys(d, {"snapshot_dir", "cache_dir", "stale_after_days"}, source, "data");
    std::string dir;
    if (d.contains("snapshot_dir")) {
      read(d, "snapshot_dir", dir, source);
      s.data_dir = dir;
    }
    if (d.contains("cache_dir")) {
      read(d, "cache_dir", dir, source);
      s.cache_dir = dir;
    }
    read(d, "stale_after_days", s.stale_after_days, source);
  }
  try {
    s.targets.validate();
  } catch (const Error& e) {
    fail(source, e.what());
  }
  return s;
}

RunSettings load_settings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_settings(ss.str(), path.string());
}

}  // namespace jobcost
