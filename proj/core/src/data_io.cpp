#include "jobcost/data_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#ifdef JOBCOST_HAVE_CURL
#include <curl/curl.h>
#endif

#include "jobcost/errors.hpp"

namespace jobcost {

namespace fs = std::filesystem;

namespace {

constexpr std::array<SeriesSpec, 5> kSeries{{
    {"JTSHIL", SeriesRole::Hires, 1000.0, "thousands of persons"},
    {"PAYEMS", SeriesRole::Employment, 1000.0, "thousands of persons"},
    {"UNEMPLOY", SeriesRole::Unemployment, 1000.0, "thousands of persons"},
    {"JTSJOL", SeriesRole::Vacancies, 1000.0, "thousands of persons"},
    {"UNRATE", SeriesRole::UnemploymentRate, 1.0, "percent"},
}};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidConfig, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomically(const fs::path& path, const std::string& body) {
  fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::InvalidConfig, "cannot write " + tmp.string());
    out << body;
  }
  fs::rename(tmp, path);
}

long long now_seconds() {
  using namespace std::chrono;
  return duration_cast<seconds>(system_clock::now().time_since_epoch()).count();
}

// <ID>.meta holds key=value lines; only retrieved_at matters for staleness.
std::optional<long long> retrieved_at(const fs::path& meta) {
  std::ifstream in(meta);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("retrieved_at=", 0) == 0) {
      try {
        return std::stoll(line.substr(13));
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

DatedSeries scaled(const DatedSeries& s, double factor) {
  DatedSeries out = s;
  for (auto& p : out.points) {
    if (p.value) *p.value *= factor;
  }
  return out;
}

void require_cover(const DatedSeries& s, YearMonth first, YearMonth last) {
  if (s.empty() || first < s.first() || s.last() < last) {
    throw Error(ErrorCode::RangeNotCovered,
                s.id + " does not cover " + first.to_string() + ".." + last.to_string() +
                    (s.empty() ? " (empty)" : " (has " + s.first().to_string() + ".." +
                                                  s.last().to_string() + ")"));
  }
}

#ifdef JOBCOST_HAVE_CURL
size_t append_body(char* data, size_t size, size_t n, void* user) {
  static_cast<std::string*>(user)->append(data, size * n);
  return size * n;
}
#endif

}  // namespace

std::span<const SeriesSpec> known_series() { return kSeries; }

const SeriesSpec& series_spec(std::string_view fred_id) {
  for (const auto& s : kSeries) {
    if (s.fred_id == fred_id) return s;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown series id " + std::string(fred_id));
}

DatedSeries parse_fred_csv(std::string_view text, std::string_view expected_id) {
  DatedSeries out;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;

    if (line_no == 1 && line.size() >= 3 && line.substr(0, 3) == "\xEF\xBB\xBF") line.remove_prefix(3);
    const auto comma = line.find(',');
    if (!header_seen) {
      const auto first = comma == std::string_view::npos ? line : trim(line.substr(0, comma));
      const std::string key = lower(first);
      if (comma == std::string_view::npos || (key != "date" && key != "observation_date")) {
        throw ParseError(ErrorCode::MalformedHeader, line_no,
                         "expected DATE,<ID> or observation_date,<ID>, got '" + std::string(line) + "'");
      }
      out.id = std::string(trim(line.substr(comma + 1)));
      if (out.id.empty() || out.id.find(',') != std::string::npos) {
        throw ParseError(ErrorCode::MalformedHeader, line_no, "header must have exactly two columns");
      }
      if (!expected_id.empty() && out.id != expected_id) {
        throw ParseError(ErrorCode::MalformedHeader, line_no,
                         "expected series " + std::string(expected_id) + ", file has " + out.id);
      }
      header_seen = true;
      continue;
    }

    if (comma == std::string_view::npos) {
      throw ParseError(ErrorCode::UnparsableRow, line_no, "missing comma: '" + std::string(line) + "'");
    }
    DatedPoint p;
    try {
      p.date = YearMonth::parse(trim(line.substr(0, comma)));
    } catch (const Error&) {
      throw ParseError(ErrorCode::UnparsableRow, line_no, "bad date: '" + std::string(line) + "'");
    }
    const auto field = trim(line.substr(comma + 1));
    if (!field.empty() && field != ".") {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
      if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(ErrorCode::UnparsableRow, line_no, "bad value: '" + std::string(line) + "'");
      }
      p.value = v;
    }
    if (!out.points.empty() && !(out.points.back().date < p.date)) {
      throw ParseError(ErrorCode::NonMonotoneDates, line_no,
                       p.date.to_string() + " does not follow " + out.points.back().date.to_string());
    }
    out.points.push_back(p);
  }
  if (!header_seen) throw ParseError(ErrorCode::MalformedHeader, 1, "empty file");
  return out;
}

std::string write_fred_csv(const DatedSeries& series) {
  std::string out = "DATE," + series.id + "\n";
  char buf[64];
  for (const auto& p : series.points) {
    out += p.date.to_iso_date();
    out += ',';
    if (p.value) {
      // shortest representation that round-trips
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, *p.value);
      out.append(buf, ptr);
    } else {
      out += '.';
    }
    out += '\n';
  }
  return out;
}

DatedSeries read_fred_file(const fs::path& path, std::string_view expected_id) {
  return parse_fred_csv(read_file(path), expected_id);
}

std::string fred_csv_url(std::string_view fred_id) {
  return "https://fred.stlouisfed.org/graph/fredgraph.csv?id=" + std::string(fred_id);
}

bool http_client_available() noexcept {
#ifdef JOBCOST_HAVE_CURL
  return true;
#else
  return false;
#endif
}

std::string http_get(const std::string& url) {
#ifdef JOBCOST_HAVE_CURL
  static const bool initialised = curl_global_init(CURL_GLOBAL_DEFAULT) == CURLE_OK;
  if (!initialised) throw Error(ErrorCode::NetworkUnavailable, "libcurl failed to initialise");
  CURL* curl = curl_easy_init();
  if (!curl) throw Error(ErrorCode::NetworkUnavailable, "libcurl handle unavailable");
  std::string body;
  curl_easy_setopt(curl, CURLOPT_URL, url.c_str());
  curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
  curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, append_body);
  curl_easy_setopt(curl, CURLOPT_WRITEDATA, &body);
  curl_easy_setopt(curl, CURLOPT_USERAGENT, "jobcost/0.1");
  curl_easy_setopt(curl, CURLOPT_CONNECTTIMEOUT, 15L);
  curl_easy_setopt(curl, CURLOPT_TIMEOUT, 60L);
  const CURLcode rc = curl_easy_perform(curl);
  long status = 0;
  curl_easy_getinfo(curl, CURLINFO_RESPONSE_CODE, &status);
  curl_easy_cleanup(curl);
  if (rc != CURLE_OK) {
    throw Error(ErrorCode::NetworkUnavailable, url + ": " + curl_easy_strerror(rc));
  }
  if (status != 200) {
    throw Error(ErrorCode::NetworkUnavailable, url + ": HTTP " + std::to_string(status));
  }
  return body;
#else
  throw Error(ErrorCode::NetworkUnavailable,
              "built without an HTTP client; cannot fetch " + url);
#endif
}

FetchResult fetch_series(const SeriesSpec& spec, const FetchOptions& options) {
  const std::string id(spec.fred_id);
  const fs::path cached = options.cache_dir / (id + ".csv");
  const fs::path meta = options.cache_dir / (id + ".meta");

  if (!options.refresh) {
    if (options.snapshot_dir) {
      const fs::path snap = *options.snapshot_dir / (id + ".csv");
      if (fs::exists(snap)) return {read_fred_file(snap, id), "snapshot", snap, false};
    }
    if (fs::exists(cached)) {
      FetchResult r{read_fred_file(cached, id), "cache", cached, false};
      const auto when = retrieved_at(meta);
      const long long age = when ? now_seconds() - *when : -1;
      if (!when || age > 86400LL * options.stale_after_days) {
        r.stale = true;
        if (options.warn) {
          options.warn("StaleCacheWarning: " + cached.string() +
                       (when ? " is " + std::to_string(age / 86400) + " days old" : " has no retrieval time"));
        }
      }
      return r;
    }
  }

  if (options.offline) {
    throw Error(ErrorCode::NetworkUnavailable,
                "offline and no local copy of " + id + " (looked in " +
                    (options.snapshot_dir ? options.snapshot_dir->string() + " and " : std::string()) +
                    options.cache_dir.string() + "); run `jobcost fetch` with network access or drop a "
                    "FRED CSV named " + id + ".csv there");
  }

  const std::string url = fred_csv_url(id);
  std::string body;
  try {
    body = options.get(url);
  } catch (const Error& e) {
    if (options.refresh && fs::exists(cached)) {
      if (options.warn) options.warn(std::string(e.what()) + "; keeping cached " + cached.string());
      return {read_fred_file(cached, id), "cache", cached, true};
    }
    throw;
  }
  DatedSeries series = parse_fred_csv(body, id);
  write_atomically(cached, body);
  write_atomically(meta, "retrieved_at=" + std::to_string(now_seconds()) + "\nsource=" + url + "\n");
  return {std::move(series), "network", cached, false};
}

SeriesSet load_series_set(const FetchOptions& options) {
  SeriesSet set;
  set.hires = fetch_series(series_spec("JTSHIL"), options).series;
  set.employment = fetch_series(series_spec("PAYEMS"), options).series;
  set.unemployment = fetch_series(series_spec("UNEMPLOY"), options).series;
  set.vacancies = fetch_series(series_spec("JTSJOL"), options).series;
  set.unrate = fetch_series(series_spec("UNRATE"), options).series;
  return set;
}

Assembly assemble(const MonthRange& range, const SeriesSet& raw) {
  for (const auto* s : {&raw.hires, &raw.employment, &raw.unemployment, &raw.vacancies, &raw.unrate}) {
    require_cover(*s, range.first, range.last);
  }
  Assembly out;
  const DatedSeries hires = scaled(raw.hires, 1000.0);
  const DatedSeries employment = scaled(raw.employment, 1000.0);
  out.unemployment = scaled(raw.unemployment, 1000.0);
  out.vacancies = scaled(raw.vacancies, 1000.0);

  for (YearMonth m = range.first; m <= range.last; m = m.next()) {
    MonthObs obs;
    obs.date = m;
    const auto e = employment.value_at(m);
    const auto e1 = employment.value_at(m.next());
    const auto h = hires.value_at(m);
    const auto u = out.unemployment.value_at(m);
    const auto v = out.vacancies.value_at(m);
    obs.unrate_percent = raw.unrate.value_at(m);

    std::string missing;
    const auto note = [&](bool have, const char* what) {
      if (have) return;
      if (!missing.empty()) missing += ' ';
      missing += what;
    };
    note(e.has_value(), "PAYEMS");
    note(e1.has_value(), "PAYEMS(t+1)");
    note(h.has_value(), "JTSHIL");
    note(u.has_value(), "UNEMPLOY");
    note(v.has_value(), "JTSJOL");
    if (!missing.empty()) obs.flag = "gap: " + missing;

    obs.e_t = e.value_or(0.0);
    obs.e_next = e1.value_or(0.0);
    obs.hires = h.value_or(0.0);
    obs.u_t = u.value_or(0.0);
    obs.l_t = obs.e_t + obs.u_t;
    out.months.push_back(obs);
    out.theta.push_back(v && u && *u > 0.0 ? std::optional<double>(*v / *u) : std::nullopt);
  }
  return out;
}

}  // namespace jobcost
