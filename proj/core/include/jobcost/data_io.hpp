#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jobcost/calendar.hpp"
#include "jobcost/flows.hpp"

namespace jobcost {

enum class SeriesRole { Hires, Employment, Unemployment, Vacancies, UnemploymentRate };

struct SeriesSpec {
  std::string_view fred_id;
  SeriesRole role;
  double to_persons;  // 1000 for counts reported in thousands, 1 for percent
  std::string_view units;
};

/// JTSHIL, PAYEMS, UNEMPLOY, JTSJOL, UNRATE.
std::span<const SeriesSpec> known_series();
/// Throws Error(InvalidConfig) for an id outside the known set.
const SeriesSpec& series_spec(std::string_view fred_id);

/// FRED graph CSV: header DATE,<ID> or observation_date,<ID>, one month per
/// row, "." (or empty) for a missing value. If expected_id is given the header
/// must name it.
DatedSeries parse_fred_csv(std::string_view text, std::string_view expected_id = {});
std::string write_fred_csv(const DatedSeries& series);
DatedSeries read_fred_file(const std::filesystem::path& path, std::string_view expected_id = {});

std::string fred_csv_url(std::string_view fred_id);

/// HTTPS GET returning the body. Throws NetworkUnavailable when the build has
/// no HTTP client or the transfer fails.
std::string http_get(const std::string& url);
bool http_client_available() noexcept;

struct FetchOptions {
  std::filesystem::path cache_dir = "cache";
  std::optional<std::filesystem::path> snapshot_dir;
  bool offline = false;
  bool refresh = false;  // skip snapshot and cache and go to the network
  int stale_after_days = 30;
  std::function<void(const std::string&)> warn;
  std::function<std::string(const std::string&)> get = http_get;  // swappable in tests
};

struct FetchResult {
  DatedSeries series;
  std::string source;  // snapshot | cache | network
  std::filesystem::path path;
  bool stale = false;
};

/// Offline-first: pinned snapshot, then cache, then network (unless offline).
/// Downloads are parsed before they are cached, and cache writes go through a
/// temporary file and a rename.
FetchResult fetch_series(const SeriesSpec& spec, const FetchOptions& options);

struct SeriesSet {
  DatedSeries hires;         // JTSHIL, thousands
  DatedSeries employment;    // PAYEMS, thousands
  DatedSeries unemployment;  // UNEMPLOY, thousands
  DatedSeries vacancies;     // JTSJOL, thousands
  DatedSeries unrate;        // UNRATE, percent
};

SeriesSet load_series_set(const FetchOptions& options);

struct Assembly {
  std::vector<MonthObs> months;
  std::vector<std::optional<double>> theta;
  DatedSeries vacancies;     // persons
  DatedSeries unemployment;  // persons
};

/// Month records over the range, in persons:
///   e_t = PAYEMS(t), e_next = PAYEMS(t+1), hires = JTSHIL(t), u_t = UNEMPLOY(t),
///   l_t = PAYEMS(t) + UNEMPLOY(t), theta_t = JTSJOL(t)/UNEMPLOY(t).
/// Months with a gap in any of these carry a flag. Throws RangeNotCovered when a
/// series does not span the range.
Assembly assemble(const MonthRange& range, const SeriesSet& series);

}  // namespace jobcost
