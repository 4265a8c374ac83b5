#include "jobcost/calendar.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>

#include "jobcost/errors.hpp"

namespace jobcost {

namespace {

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

YearMonth YearMonth::from_ordinal(long n) noexcept {
  // floor division so that negative ordinals still map to month 1..12
  long y = n / 12;
  long m = n % 12;
  if (m < 0) {
    m += 12;
    --y;
  }
  return {static_cast<int>(y), static_cast<int>(m) + 1};
}

YearMonth YearMonth::parse(std::string_view text) {
  int y = 0, m = 0, d = 1;
  bool ok = text.size() >= 7 && text[4] == '-' && parse_int(text.substr(0, 4), y) &&
            parse_int(text.substr(5, 2), m);
  if (ok && text.size() > 7) {
    ok = text.size() == 10 && text[7] == '-' && parse_int(text.substr(8, 2), d);
  }
  if (!ok || m < 1 || m > 12 || d < 1 || d > 31) {
    throw Error(ErrorCode::InvalidConfig, "not a date: '" + std::string(text) + "'");
  }
  return {y, m};
}

std::string YearMonth::to_string() const {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
  return buf;
}

std::string YearMonth::to_iso_date() const { return to_string() + "-01"; }

MonthRange MonthRange::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidConfig,
                "range must look like YYYY-MM:YYYY-MM, got '" + std::string(text) + "'");
  }
  MonthRange r{YearMonth::parse(text.substr(0, colon)), YearMonth::parse(text.substr(colon + 1))};
  if (r.last < r.first) {
    throw Error(ErrorCode::InvalidConfig, "range ends before it starts: " + std::string(text));
  }
  return r;
}

const DatedPoint* DatedSeries::find(YearMonth m) const {
  const auto it = std::lower_bound(points.begin(), points.end(), m,
                                   [](const DatedPoint& p, YearMonth key) { return p.date < key; });
  if (it == points.end() || it->date != m) return nullptr;
  return &*it;
}

std::optional<double> DatedSeries::value_at(YearMonth m) const {
  const DatedPoint* p = find(m);
  return p ? p->value : std::nullopt;
}

}  // namespace jobcost
