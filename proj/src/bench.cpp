#include "wellkit/bench.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/rng.hpp"

namespace wellkit {

const WellLog& select_complete_well(const Dataset& dataset, std::string_view configured_id,
                                    double threshold) {
  if (dataset.wells.empty()) throw ParameterError("empty dataset");

  if (!configured_id.empty()) {
    const WellLog* well = dataset.find(configured_id);
    if (!well) throw ParameterError("unknown well: " + std::string(configured_id));
    const auto gaps = detect_gaps(*well, threshold);
    if (!gaps.empty()) {
      throw ParameterError("ineligible well: " + std::string(configured_id) + " has " +
                           std::to_string(gaps.size()) +
                           " gaps; the benchmark needs a gapless well");
    }
    return *well;
  }

  const WellLog* best = nullptr;
  for (const WellLog& w : dataset.wells) {
    if (!detect_gaps(w, threshold).empty()) continue;
    if (!best || w.size() > best->size() ||
        (w.size() == best->size() && w.well_id < best->well_id)) {
      best = &w;
    }
  }
  if (!best) throw ParameterError("no gapless well in dataset");
  return *best;
}

std::vector<GapTrial> generate_trials(const WellLog& well, const BenchPlan& plan) {
  const Index n = well.size();
  if (plan.trials_per_size < 1) throw ParameterError("trials_per_size must be >= 1");
  for (int size : plan.gap_sizes) {
    if (size < 1) throw ParameterError("gap size must be >= 1");
    if (size >= n) {
      throw ParameterError("gap size " + std::to_string(size) + " does not fit a well of " +
                           std::to_string(n) + " records");
    }
  }

  const Vector target = well.curve(plan.target_curve);
  std::vector<GapTrial> trials;
  trials.reserve(plan.gap_sizes.size() * static_cast<std::size_t>(plan.trials_per_size));
  for (int size : plan.gap_sizes) {
    for (int trial_id = 0; trial_id < plan.trials_per_size; ++trial_id) {
      GapTrial trial;
      trial.trial_id = trial_id;
      trial.gap_size = size;
      trial.seed = derive_seed(plan.seed, {static_cast<std::uint64_t>(size),
                                           static_cast<std::uint64_t>(trial_id)});
      Rng rng(trial.seed);
      trial.start_index =
          static_cast<Index>(rng.below(static_cast<std::uint64_t>(n - size) + 1));
      trial.truth = target.segment(trial.start_index, size);
      trials.push_back(std::move(trial));
    }
  }
  return trials;
}

TrainTestSplit make_split(const WellLog& well, const GapTrial& trial, const BenchPlan& plan) {
  const Index n = well.size();
  if (trial.start_index < 0 || trial.start_index + trial.gap_size > n) {
    throw ParameterError("trial does not fit well " + well.well_id);
  }
  if (plan.feature_curves.empty()) throw ParameterError("no feature curves configured");
  for (Curve c : plan.feature_curves) {
    if (c == plan.target_curve) {
      throw ParameterError(std::string("target curve ") + std::string(curve_name(c)) +
                           " cannot also be a feature");
    }
  }

  TrainTestSplit split;
  for (Curve c : plan.feature_curves) {
    const Vector values = well.curve(c);
    if (values.maxCoeff() == values.minCoeff()) {
      split.dropped_features.push_back(c);
    } else {
      split.used_features.push_back(c);
    }
  }
  if (split.used_features.empty()) {
    throw ParameterError("no usable features: every configured column is constant in well " +
                         well.well_id);
  }

  const Matrix all_features = well.features(split.used_features);
  const Vector target = well.curve(plan.target_curve);

  const Index gap_begin = trial.start_index;
  const Index gap_end = trial.start_index + trial.gap_size;
  const Index n_test = trial.gap_size;
  const Index n_train = n - n_test;

  split.train_features.resize(n_train, all_features.cols());
  split.train_targets.resize(n_train);
  split.test_features.resize(n_test, all_features.cols());
  split.test_truth.resize(n_test);
  split.train_indices.reserve(static_cast<std::size_t>(n_train));
  split.test_indices.reserve(static_cast<std::size_t>(n_test));

  Index train_row = 0;
  Index test_row = 0;
  for (Index i = 0; i < n; ++i) {
    if (i >= gap_begin && i < gap_end) {
      split.test_features.row(test_row) = all_features.row(i);
      split.test_truth(test_row) = target(i);
      split.test_indices.push_back(i);
      ++test_row;
    } else {
      split.train_features.row(train_row) = all_features.row(i);
      split.train_targets(train_row) = target(i);
      split.train_indices.push_back(i);
      ++train_row;
    }
  }
  return split;
}

void write_trials_csv(const std::vector<GapTrial>& trials, std::ostream& out) {
  out << "trial_id,gap_size,start_index,seed\n";
  for (const GapTrial& t : trials) {
    out << t.trial_id << ',' << t.gap_size << ',' << t.start_index << ',' << t.seed << '\n';
  }
}

}  // namespace wellkit
