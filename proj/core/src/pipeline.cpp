#include "jobcost/pipeline.hpp"

namespace jobcost {

FetchOptions fetch_options(const RunSettings& settings, bool offline) {
  FetchOptions f;
  f.cache_dir = settings.cache_dir;
  f.snapshot_dir = settings.data_dir;
  f.offline = offline;
  f.stale_after_days = settings.stale_after_days;
  return f;
}

DataPipeline run_data_pipeline(const RunSettings& settings, const FetchOptions& fetch) {
  return run_data_pipeline(settings, load_series_set(fetch));
}

DataPipeline run_data_pipeline(const RunSettings& settings, const SeriesSet& series) {
  DataPipeline p;
  p.assembly = assemble(settings.range, series);
  p.rates = adjust_series(p.assembly.months);
  p.sample = build_sample(p.rates, p.assembly.vacancies, p.assembly.unemployment, settings.regimes);
  for (const auto& t : p.assembly.theta) {
    if (t) p.theta_observed.push_back(*t);
  }
  for (const auto& r : p.rates) {
    if (r.ok()) ++p.solved_months;
  }
  return p;
}

}  // namespace jobcost
