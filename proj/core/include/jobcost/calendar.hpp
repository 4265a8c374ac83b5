#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jobcost {

/// Calendar month. Everything in the flows and estimation pipelines is
/// month-indexed, so days are dropped at the parse boundary.
struct YearMonth {
  int year = 2000;
  int month = 1;  // 1..12

  /// Months since year 0, handy for differences and consecutiveness checks.
  long ordinal() const noexcept { return static_cast<long>(year) * 12 + (month - 1); }
  static YearMonth from_ordinal(long n) noexcept;

  YearMonth next() const noexcept { return from_ordinal(ordinal() + 1); }
  YearMonth prev() const noexcept { return from_ordinal(ordinal() - 1); }

  /// Accepts YYYY-MM and YYYY-MM-DD. Throws Error(InvalidConfig) otherwise.
  static YearMonth parse(std::string_view text);
  /// YYYY-MM
  std::string to_string() const;
  /// YYYY-MM-01, the FRED convention.
  std::string to_iso_date() const;

  friend auto operator<=>(const YearMonth&, const YearMonth&) = default;
};

/// Inclusive month range, written YYYY-MM:YYYY-MM on the command line.
struct MonthRange {
  YearMonth first{2000, 12};
  YearMonth last{2023, 5};

  static MonthRange parse(std::string_view text);
  long size() const noexcept { return last.ordinal() - first.ordinal() + 1; }
  bool contains(YearMonth m) const noexcept { return first <= m && m <= last; }
};

struct DatedPoint {
  YearMonth date;
  std::optional<double> value;  // empty for a reported gap
};

/// Monthly series in chronological order. Gaps are kept as empty values so
/// nothing downstream can mistake them for zeros.
struct DatedSeries {
  std::string id;
  std::vector<DatedPoint> points;

  const DatedPoint* find(YearMonth m) const;
  std::optional<double> value_at(YearMonth m) const;
  bool empty() const noexcept { return points.empty(); }
  YearMonth first() const { return points.front().date; }
  YearMonth last() const { return points.back().date; }
};

}  // namespace jobcost
