#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jobcost {

enum class ErrorCode {
  InvalidCalibration,
  NonPositiveTheta,
  ProbabilityOverflow,
  NonPositiveUpperBracket,
  ZeroBargainingPower,
  ZeroVacancyCost,
  NoSignChange,
  MultipleRootsDetected,
  OutOfRangeElasticity,
  NonPositiveSurplus,
  NonPositiveCost,
  NoRoot,
  DegenerateLaborForce,
  ZeroUnemployment,
  MisalignedSeries,
  NoInteriorMinimum,
  RankDeficientDummies,
  TooFewObservations,
  MalformedHeader,
  UnparsableRow,
  NonMonotoneDates,
  NetworkUnavailable,
  RangeNotCovered,
  InvalidConfig,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is stable
/// and is what callers (and the CLI exit-code mapping) switch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised when the sign scan of the equilibrium condition finds more than one
/// crossing. All refined roots are carried so that nothing is chosen silently.
class MultipleEquilibria : public Error {
 public:
  MultipleEquilibria(std::vector<double> roots, const std::string& what);

  const std::vector<double>& roots() const noexcept { return roots_; }

 private:
  std::vector<double> roots_;
};

/// Parse failures carry the 1-based line number of the offending row.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace jobcost
