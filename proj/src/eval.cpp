#include "wellkit/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "wellkit/errors.hpp"
#include "wellkit/rng.hpp"
#include "wellkit/stats.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

double elapsed_millis(std::chrono::steady_clock::time_point begin,
                      std::chrono::steady_clock::time_point end) {
  return std::chrono::duration<double, std::milli>(end - begin).count();
}

void check_partition(const TrainTestSplit& split, Index n) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Index i : split.train_indices) seen[static_cast<std::size_t>(i)] += 1;
  for (Index i : split.test_indices) seen[static_cast<std::size_t>(i)] += 1;
  for (char c : seen) {
    if (c != 1) {
      throw Error("internal: train/test rows do not partition the well");
    }
  }
}

}  // namespace

double mae(const Vector& pred, const Vector& truth) {
  if (pred.size() != truth.size()) {
    throw ShapeError("mae: prediction length " + std::to_string(pred.size()) +
                     " does not match truth length " + std::to_string(truth.size()));
  }
  if (pred.size() == 0) throw ShapeError("mae: empty input");
  return (pred - truth).cwiseAbs().mean();
}

BenchResult run_benchmark(const Dataset& dataset, const BenchPlan& plan,
                          const ModelConfigs& configs, std::uint64_t seed) {
  if (configs.enabled.empty()) throw ParameterError("no models enabled");

  const WellLog& well = select_complete_well(dataset, plan.well_id);
  const std::vector<GapTrial> trials = generate_trials(well, plan);

  BenchResult result;
  result.well_id = well.well_id;
  result.records.reserve(trials.size() * configs.enabled.size());
  result.traces.reserve(trials.size());

  for (const GapTrial& trial : trials) {
    const TrainTestSplit split = make_split(well, trial, plan);
    check_partition(split, well.size());

    GapPredictionTrace trace;
    trace.trial_id = trial.trial_id;
    trace.gap_size = trial.gap_size;
    trace.truth = split.test_truth;
    trace.depths.reserve(split.test_indices.size());
    for (Index i : split.test_indices) {
      trace.depths.push_back(well.raw_depths[static_cast<std::size_t>(i)]);
    }

    // canonical model order keeps outputs independent of the enable order
    for (ModelKind kind : kAllModels) {
      if (!configs.is_enabled(kind)) continue;

      EvalRecord record;
      record.model = kind;
      record.gap_size = trial.gap_size;
      record.trial_id = trial.trial_id;
      record.start_index = trial.start_index;

      const std::uint64_t cell_seed =
          derive_seed(seed, {static_cast<std::uint64_t>(kind),
                             static_cast<std::uint64_t>(trial.gap_size),
                             static_cast<std::uint64_t>(trial.trial_id)});
      try {
        const auto model = make_regressor(kind, configs);
        const auto t0 = std::chrono::steady_clock::now();
        model->fit(split.train_features, split.train_targets, cell_seed);
        const auto t1 = std::chrono::steady_clock::now();
        const Vector pred = model->predict(split.test_features);
        const auto t2 = std::chrono::steady_clock::now();
        record.mae = mae(pred, split.test_truth);
        record.fit_millis = elapsed_millis(t0, t1);
        record.predict_millis = elapsed_millis(t1, t2);
        trace.predictions.emplace_back(kind, pred);
      } catch (const Error& e) {
        record.ok = false;
        record.error = e.what();
        record.mae = std::numeric_limits<double>::quiet_NaN();
        trace.predictions.emplace_back(
            kind, Vector::Constant(split.test_truth.size(),
                                   std::numeric_limits<double>::quiet_NaN()));
        result.any_failed = true;
      }
      result.records.push_back(std::move(record));
    }
    result.traces.push_back(std::move(trace));
  }
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<EvalRecord>& records) {
  if (records.empty()) throw ParameterError("no records to summarize");

  std::map<std::pair<int, int>, std::vector<double>> groups;  // (model, gap_size) -> maes
  for (const EvalRecord& r : records) {
    if (!r.ok) continue;
    groups[{static_cast<int>(r.model), r.gap_size}].push_back(r.mae);
  }
  if (groups.empty()) throw ParameterError("no successful records to summarize");

  std::vector<SummaryRow> rows;
  rows.reserve(groups.size());
  for (auto& [key, maes] : groups) {
    std::sort(maes.begin(), maes.end());
    SummaryRow row;
    row.model = static_cast<ModelKind>(key.first);
    row.gap_size = key.second;
    row.min = maes.front();
    row.q25 = quantile_sorted(maes, 0.25);
    row.median = quantile_sorted(maes, 0.50);
    row.q75 = quantile_sorted(maes, 0.75);
    row.max = maes.back();
    row.mean = mean(Eigen::Map<const Vector>(maes.data(), static_cast<Index>(maes.size())));
    row.n = maes.size();
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::string> model_config_lines(const ModelConfigs& configs) {
  std::vector<std::string> lines;
  std::string models;
  for (ModelKind kind : kAllModels) {
    if (!configs.is_enabled(kind)) continue;
    if (!models.empty()) models += ',';
    models += to_lower(model_name(kind));
  }
  lines.push_back("models=" + models);
  lines.push_back("model.brr.prior_a=" + format_double(configs.brr.prior_a));
  lines.push_back("model.brr.prior_b=" + format_double(configs.brr.prior_b));
  lines.push_back("model.brr.max_iter=" + std::to_string(configs.brr.max_iter));
  lines.push_back("model.brr.tol=" + format_double(configs.brr.tol));
  lines.push_back("model.brr.lambda_init=" + format_double(configs.brr.lambda_init));
  lines.push_back("model.ransac.min_samples=" + std::to_string(configs.ransac.min_samples));
  lines.push_back("model.ransac.residual_threshold=" +
                  (configs.ransac.residual_threshold < 0.0
                       ? std::string("auto")
                       : format_double(configs.ransac.residual_threshold)));
  lines.push_back("model.ransac.max_trials=" + std::to_string(configs.ransac.max_trials));
  lines.push_back("model.rf.n_trees=" + std::to_string(configs.rf.n_trees));
  lines.push_back("model.rf.max_depth=" + std::to_string(configs.rf.max_depth));
  lines.push_back("model.rf.min_samples_leaf=" + std::to_string(configs.rf.min_samples_leaf));
  lines.push_back("model.rf.max_features=" + std::to_string(configs.rf.max_features));
  lines.push_back("model.rf.bootstrap=" + std::string(configs.rf.bootstrap ? "true" : "false"));
  lines.push_back("model.ann.hidden=" + std::to_string(configs.ann.hidden));
  lines.push_back("model.ann.epochs=" + std::to_string(configs.ann.epochs));
  lines.push_back("model.ann.batch=" + std::to_string(configs.ann.batch));
  lines.push_back("model.ann.step=" + format_double(configs.ann.step));
  return lines;
}

void write_results_csv(const BenchResult& result, const ModelConfigs& configs,
                       std::ostream& out) {
  for (const std::string& line : model_config_lines(configs)) out << "# " << line << '\n';
  out << "model,gap_size,trial_id,start_index,mae,fit_millis,predict_millis,status\n";
  for (const EvalRecord& r : result.records) {
    std::string status = "ok";
    if (!r.ok) {
      status = "failed: " + r.error;
      std::replace(status.begin(), status.end(), ',', ';');
    }
    out << model_name(r.model) << ',' << r.gap_size << ',' << r.trial_id << ',' << r.start_index
        << ',' << format_double(r.mae) << ',' << format_double(r.fit_millis) << ','
        << format_double(r.predict_millis) << ',' << status << '\n';
  }
}

void write_summary_csv(const std::vector<SummaryRow>& rows, const ModelConfigs& configs,
                       std::ostream& out) {
  for (const std::string& line : model_config_lines(configs)) out << "# " << line << '\n';
  out << "model,gap_size,min,q25,median,q75,max,mean,n\n";
  for (const SummaryRow& r : rows) {
    out << model_name(r.model) << ',' << r.gap_size << ',' << format_double(r.min) << ','
        << format_double(r.q25) << ',' << format_double(r.median) << ',' << format_double(r.q75)
        << ',' << format_double(r.max) << ',' << format_double(r.mean) << ',' << r.n << '\n';
  }
}

void write_trace_csv(const GapPredictionTrace& trace, std::ostream& out) {
  out << "depth,truth";
  for (const auto& [kind, pred] : trace.predictions) out << ',' << model_name(kind);
  out << '\n';
  for (std::size_t i = 0; i < trace.depths.size(); ++i) {
    out << format_double(trace.depths[i]) << ','
        << format_double(trace.truth(static_cast<Index>(i)));
    for (const auto& [kind, pred] : trace.predictions) {
      out << ',' << format_double(pred(static_cast<Index>(i)));
    }
    out << '\n';
  }
}

}  // namespace wellkit
