#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellkit/gaps.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

/// One seeded synthetic gap: a masked half-open index range with its
/// held-out target values. Regenerating with the same (plan seed, gap
/// size, trial id, well) yields an identical trial.
struct GapTrial {
  int trial_id = 0;
  int gap_size = 0;
  Index start_index = 0;
  Vector truth;
  std::uint64_t seed = 0;
};

struct BenchPlan {
  std::string well_id;  // empty -> auto-select the longest gapless well
  std::vector<int> gap_sizes{16, 66, 168};
  int trials_per_size = 30;
  Curve target_curve = Curve::Nphi;
  std::vector<Curve> feature_curves{Curve::Depth, Curve::Rhob, Curve::Dt, Curve::Gr};
  std::uint64_t seed = 1729;
};

struct TrainTestSplit {
  Matrix train_features;
  Vector train_targets;
  Matrix test_features;
  Vector test_truth;
  std::vector<Index> train_indices;
  std::vector<Index> test_indices;
  std::vector<Curve> used_features;     // plan order, constants removed
  std::vector<Curve> dropped_features;  // constant within the well
};

/// Returns the configured well if it is gapless, otherwise the longest
/// gapless well (ties broken by lexicographically smaller id).
const WellLog& select_complete_well(const Dataset& dataset, std::string_view configured_id = {},
                                    double threshold = kDefaultGapThreshold);

/// trials_per_size trials for each gap size, in plan order. Start indices
/// are drawn uniformly from {0, ..., N - gap_size} with a per-trial seed
/// derived from (plan seed, gap size, trial id); trials may overlap.
std::vector<GapTrial> generate_trials(const WellLog& well, const BenchPlan& plan);

/// Masked rows become the test set, every other row the training set.
/// Feature columns that are constant across the well are dropped.
TrainTestSplit make_split(const WellLog& well, const GapTrial& trial, const BenchPlan& plan);

void write_trials_csv(const std::vector<GapTrial>& trials, std::ostream& out);

}  // namespace wellkit
