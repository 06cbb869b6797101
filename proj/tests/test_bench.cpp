#include <doctest.h>

#include <algorithm>
#include <set>

#include "support/oracles.hpp"
#include "wellkit/bench.hpp"
#include "wellkit/errors.hpp"
#include "wellkit/synthetic.hpp"

using namespace wellkit;

namespace {

WellLog gapless_well(const std::string& id, std::size_t n, std::uint64_t seed = 7) {
  SyntheticWellSpec spec;
  spec.id = id;
  spec.n = n;
  spec.seed = seed;
  spec.raw_scales = false;
  spec.latitude = 0.4;
  spec.longitude = 0.6;
  return make_synthetic_well(spec);
}

WellLog gappy_well(const std::string& id, std::size_t n) {
  return delete_index_ranges(gapless_well(id, n), {{n / 2, n / 2 + 10}});
}

}  // namespace

TEST_CASE("selection prefers the only gapless candidate") {
  Dataset data;
  data.wells.push_back(gappy_well("A", 300));
  data.wells.push_back(gapless_well("B", 200));
  CHECK(select_complete_well(data).well_id == "B");
}

TEST_CASE("selection prefers the longest gapless well") {
  Dataset data;
  data.wells.push_back(gapless_well("L5", 500));
  data.wells.push_back(gapless_well("L9", 900));
  CHECK(select_complete_well(data).well_id == "L9");
}

TEST_CASE("ties break toward the smaller well id") {
  Dataset data;
  data.wells.push_back(gapless_well("W9", 400));
  data.wells.push_back(gapless_well("W2", 400, 8));
  CHECK(select_complete_well(data).well_id == "W2");
}

TEST_CASE("a configured well with gaps is ineligible") {
  Dataset data;
  data.wells.push_back(gappy_well("A", 300));
  data.wells.push_back(gapless_well("B", 200));
  CHECK_THROWS_WITH_AS(select_complete_well(data, "A"), doctest::Contains("ineligible"),
                       ParameterError);
  CHECK(select_complete_well(data, "B").well_id == "B");
  CHECK_THROWS_WITH_AS(select_complete_well(data, "Z"), doctest::Contains("unknown well"),
                       ParameterError);
}

TEST_CASE("no gapless candidate is an error") {
  Dataset data;
  data.wells.push_back(gappy_well("A", 300));
  CHECK_THROWS_WITH_AS(select_complete_well(data), doctest::Contains("no gapless"),
                       ParameterError);
}

TEST_CASE("start indices at the support boundary") {
  const WellLog well = gapless_well("W", 100);
  BenchPlan plan;
  plan.gap_sizes = {99};
  plan.trials_per_size = 200;
  const auto trials = generate_trials(well, plan);
  std::set<Index> seen;
  for (const GapTrial& t : trials) {
    CHECK(t.start_index >= 0);
    CHECK(t.start_index <= 1);  // N - gap_size = 1
    seen.insert(t.start_index);
  }
  CHECK(seen == std::set<Index>{0, 1});
}

TEST_CASE("the same plan regenerates identical trials") {
  const WellLog well = gapless_well("W", 500);
  BenchPlan plan;
  plan.seed = 99;
  const auto a = generate_trials(well, plan);
  const auto b = generate_trials(well, plan);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() == 90);  // 3 sizes x 30 trials
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].trial_id == b[i].trial_id);
    CHECK(a[i].gap_size == b[i].gap_size);
    CHECK(a[i].start_index == b[i].start_index);
    CHECK(a[i].seed == b[i].seed);
    CHECK(a[i].truth == b[i].truth);
  }
}

TEST_CASE("trial truth holds the masked target values") {
  const WellLog well = gapless_well("W", 300);
  BenchPlan plan;
  plan.gap_sizes = {16};
  plan.trials_per_size = 5;
  for (const GapTrial& t : generate_trials(well, plan)) {
    REQUIRE(t.truth.size() == t.gap_size);
    for (int i = 0; i < t.gap_size; ++i) {
      CHECK(t.truth(i) ==
            well.records[static_cast<std::size_t>(t.start_index + i)].nphi);
    }
  }
}

TEST_CASE("start indices are uniform over the support") {
  const WellLog well = gapless_well("W", 120);
  BenchPlan plan;
  plan.gap_sizes = {21};  // support {0..99}: 100 cells
  plan.trials_per_size = 10000;
  plan.seed = 1234;
  const auto trials = generate_trials(well, plan);

  std::vector<std::size_t> counts(100, 0);
  for (const GapTrial& t : trials) counts[static_cast<std::size_t>(t.start_index)] += 1;

  const double expected = 10000.0 / 100.0;
  double statistic = 0.0;
  for (std::size_t cell = 0; cell < counts.size(); ++cell) {
    const double diff = static_cast<double>(counts[cell]) - expected;
    statistic += diff * diff / expected;
  }
  // chi-square with 99 degrees of freedom at the 0.01 significance level
  const double critical = oracles::chi_square_critical(99.0, 2.3263478740408408);
  CHECK(statistic < critical);
}

TEST_CASE("changing the seed moves at least one start index") {
  const WellLog well = gapless_well("W", 400);
  BenchPlan plan;
  plan.gap_sizes = {16, 66};
  plan.trials_per_size = 5;
  plan.seed = 0;
  const auto baseline = generate_trials(well, plan);
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    BenchPlan other = plan;
    other.seed = seed;
    const auto trials = generate_trials(well, other);
    bool any_moved = false;
    for (std::size_t i = 0; i < trials.size(); ++i) {
      if (trials[i].start_index != baseline[i].start_index) any_moved = true;
    }
    CHECK(any_moved);
  }
}

TEST_CASE("plan validation") {
  const WellLog well = gapless_well("W", 100);
  BenchPlan plan;
  plan.gap_sizes = {100};
  CHECK_THROWS_WITH_AS(generate_trials(well, plan), doctest::Contains("does not fit"),
                       ParameterError);
  plan.gap_sizes = {0};
  CHECK_THROWS_AS(generate_trials(well, plan), ParameterError);
  plan.gap_sizes = {10};
  plan.trials_per_size = 0;
  CHECK_THROWS_AS(generate_trials(well, plan), ParameterError);
}

TEST_CASE("a split is an exact two-part partition") {
  const WellLog well = gapless_well("W", 10);
  BenchPlan plan;
  GapTrial trial;
  trial.gap_size = 2;
  trial.start_index = 4;
  trial.truth = well.curve(Curve::Nphi).segment(4, 2);

  const TrainTestSplit split = make_split(well, trial, plan);
  CHECK(split.train_features.rows() == 8);
  CHECK(split.test_features.rows() == 2);
  CHECK(split.test_indices == std::vector<Index>{4, 5});

  std::vector<Index> all(split.train_indices);
  all.insert(all.end(), split.test_indices.begin(), split.test_indices.end());
  std::sort(all.begin(), all.end());
  for (Index i = 0; i < 10; ++i) CHECK(all[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("random splits always reconstruct the index range") {
  const WellLog well = gapless_well("W", 257);
  BenchPlan plan;
  plan.gap_sizes = {17, 103};
  plan.trials_per_size = 10;
  for (const GapTrial& trial : generate_trials(well, plan)) {
    const TrainTestSplit split = make_split(well, trial, plan);
    CHECK(split.train_indices.size() + split.test_indices.size() == 257);
    std::vector<Index> all(split.train_indices);
    all.insert(all.end(), split.test_indices.begin(), split.test_indices.end());
    std::sort(all.begin(), all.end());
    bool exact = true;
    for (Index i = 0; i < 257; ++i) {
      if (all[static_cast<std::size_t>(i)] != i) exact = false;
    }
    CHECK(exact);
    CHECK(split.test_truth == trial.truth);
  }
}

TEST_CASE("constant feature columns are dropped with a notice") {
  const WellLog well = gapless_well("W", 50);  // latitude/longitude constant per well
  BenchPlan plan;
  plan.feature_curves = {Curve::Depth, Curve::Rhob, Curve::Latitude};
  GapTrial trial;
  trial.gap_size = 5;
  trial.start_index = 10;
  trial.truth = well.curve(Curve::Nphi).segment(10, 5);

  const TrainTestSplit split = make_split(well, trial, plan);
  CHECK(split.used_features == std::vector<Curve>{Curve::Depth, Curve::Rhob});
  CHECK(split.dropped_features == std::vector<Curve>{Curve::Latitude});
  CHECK(split.train_features.cols() == 2);
}

TEST_CASE("a split with no usable features is rejected") {
  const WellLog well = gapless_well("W", 50);
  BenchPlan plan;
  plan.feature_curves = {Curve::Latitude, Curve::Longitude};
  GapTrial trial;
  trial.gap_size = 5;
  trial.start_index = 0;
  trial.truth = well.curve(Curve::Nphi).segment(0, 5);
  CHECK_THROWS_WITH_AS(make_split(well, trial, plan), doctest::Contains("no usable features"),
                       ParameterError);
}

TEST_CASE("the target curve may not be a feature") {
  const WellLog well = gapless_well("W", 50);
  BenchPlan plan;
  plan.feature_curves = {Curve::Depth, Curve::Nphi};
  GapTrial trial;
  trial.gap_size = 5;
  trial.start_index = 0;
  trial.truth = well.curve(Curve::Nphi).segment(0, 5);
  CHECK_THROWS_AS(make_split(well, trial, plan), ParameterError);
}
