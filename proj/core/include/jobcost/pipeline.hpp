#pragma once

#include <vector>

#include "jobcost/config.hpp"
#include "jobcost/data_io.hpp"
#include "jobcost/estimation.hpp"
#include "jobcost/flows.hpp"

namespace jobcost {

/// Everything the data-driven commands need, computed once.
struct DataPipeline {
  Assembly assembly;
  std::vector<FlowRates> rates;
  EstimationSample sample;
  std::vector<double> theta_observed;  // tightness over the range, gaps skipped
  std::size_t solved_months = 0;
};

FetchOptions fetch_options(const RunSettings& settings, bool offline);

/// Loads the five series, assembles the months in settings.range, applies the
/// flow corrections and builds the estimation sample.
DataPipeline run_data_pipeline(const RunSettings& settings, const FetchOptions& fetch);
DataPipeline run_data_pipeline(const RunSettings& settings, const SeriesSet& series);

}  // namespace jobcost
