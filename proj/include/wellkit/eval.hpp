#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellkit/bench.hpp"
#include "wellkit/regressor.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

/// Result of one (model, trial) cell. Failed fits are recorded, not fatal.
struct EvalRecord {
  ModelKind model = ModelKind::Ols;
  int gap_size = 0;
  int trial_id = 0;
  Index start_index = 0;
  double mae = 0.0;  // NaN when the cell failed
  double fit_millis = 0.0;
  double predict_millis = 0.0;
  bool ok = true;
  std::string error;
};

struct SummaryRow {
  ModelKind model = ModelKind::Ols;
  int gap_size = 0;
  double min = 0.0;
  double q25 = 0.0;
  double median = 0.0;
  double q75 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t n = 0;
};

/// Masked-row depths, held-out truth, and every model's predictions for
/// one trial.
struct GapPredictionTrace {
  int trial_id = 0;
  int gap_size = 0;
  std::vector<double> depths;  // raw meters
  Vector truth;
  std::vector<std::pair<ModelKind, Vector>> predictions;  // NaN-filled on failure
};

struct BenchResult {
  std::vector<EvalRecord> records;
  std::vector<GapPredictionTrace> traces;
  std::string well_id;
  bool any_failed = false;
};

double mae(const Vector& pred, const Vector& truth);

/// Runs the full matrix: for every trial of the plan and every enabled
/// model, fit on the unmasked rows, predict the masked rows, and record
/// the mean absolute error with timings. Model errors mark the cell failed
/// and the run continues. Deterministic given the seed (timings aside).
BenchResult run_benchmark(const Dataset& dataset, const BenchPlan& plan,
                          const ModelConfigs& configs, std::uint64_t seed);

/// Per (model, gap size) order statistics of MAE over successful trials,
/// quartiles by the same rank-interpolation rule the gap statistics use.
std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records);

/// Effective hyperparameter values, echoed into every results file.
std::vector<std::string> model_config_lines(const ModelConfigs& configs);

void write_results_csv(const BenchResult& result, const ModelConfigs& configs, std::ostream& out);
void write_summary_csv(const std::vector<SummaryRow>& rows, const ModelConfigs& configs,
                       std::ostream& out);
void write_trace_csv(const GapPredictionTrace& trace, std::ostream& out);

}  // namespace wellkit
