#include "jobcost/errors.hpp"

#include <utility>

namespace jobcost {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCalibration: return "InvalidCalibration";
    case ErrorCode::NonPositiveTheta: return "NonPositiveTheta";
    case ErrorCode::ProbabilityOverflow: return "ProbabilityOverflow";
    case ErrorCode::NonPositiveUpperBracket: return "NonPositiveUpperBracket";
    case ErrorCode::ZeroBargainingPower: return "ZeroBargainingPower";
    case ErrorCode::ZeroVacancyCost: return "ZeroVacancyCost";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::MultipleRootsDetected: return "MultipleRootsDetected";
    case ErrorCode::OutOfRangeElasticity: return "OutOfRangeElasticity";
    case ErrorCode::NonPositiveSurplus: return "NonPositiveSurplus";
    case ErrorCode::NonPositiveCost: return "NonPositiveCost";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::DegenerateLaborForce: return "DegenerateLaborForce";
    case ErrorCode::ZeroUnemployment: return "ZeroUnemployment";
    case ErrorCode::MisalignedSeries: return "MisalignedSeries";
    case ErrorCode::NoInteriorMinimum: return "NoInteriorMinimum";
    case ErrorCode::RankDeficientDummies: return "RankDeficientDummies";
    case ErrorCode::TooFewObservations: return "TooFewObservations";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::UnparsableRow: return "UnparsableRow";
    case ErrorCode::NonMonotoneDates: return "NonMonotoneDates";
    case ErrorCode::NetworkUnavailable: return "NetworkUnavailable";
    case ErrorCode::RangeNotCovered: return "RangeNotCovered";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

MultipleEquilibria::MultipleEquilibria(std::vector<double> roots, const std::string& what)
    : Error(ErrorCode::MultipleRootsDetected, what), roots_(std::move(roots)) {}

ParseError::ParseError(ErrorCode code, std::size_t line, const std::string& what)
    : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

}  // namespace jobcost
