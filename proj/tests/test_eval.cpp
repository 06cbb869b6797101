#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "support/oracles.hpp"
#include "wellkit/errors.hpp"
#include "wellkit/eval.hpp"
#include "wellkit/rng.hpp"
#include "wellkit/synthetic.hpp"

using namespace wellkit;

namespace {

Dataset one_well_dataset(std::size_t n, NphiShape shape = NphiShape::NoisyLinear,
                         std::uint64_t seed = 7) {
  SyntheticWellSpec spec;
  spec.id = "W";
  spec.n = n;
  spec.seed = seed;
  spec.shape = shape;
  spec.raw_scales = false;
  spec.latitude = 0.4;
  spec.longitude = 0.6;
  Dataset data;
  data.wells.push_back(make_synthetic_well(spec));
  return data;
}

ModelConfigs fast_configs(std::vector<ModelKind> enabled) {
  ModelConfigs configs;
  configs.rf.n_trees = 10;
  configs.ann.hidden = 8;
  configs.ann.epochs = 15;
  configs.enabled = std::move(enabled);
  return configs;
}

bool same_records_ignoring_timings(const std::vector<EvalRecord>& a,
                                   const std::vector<EvalRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool same_mae =
        (std::isnan(a[i].mae) && std::isnan(b[i].mae)) || a[i].mae == b[i].mae;
    if (a[i].model != b[i].model || a[i].gap_size != b[i].gap_size ||
        a[i].trial_id != b[i].trial_id || a[i].start_index != b[i].start_index || !same_mae ||
        a[i].ok != b[i].ok || a[i].error != b[i].error) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("mae basics") {
  Vector a(2), b(2);
  a << 0.1, 0.3;
  b << 0.2, 0.2;
  CHECK(mae(a, a) == 0.0);
  CHECK(mae(a, b) == doctest::Approx(0.1));

  Vector longer(3);
  longer.setZero();
  CHECK_THROWS_AS(mae(a, longer), ShapeError);
  CHECK_THROWS_AS(mae(Vector(), Vector()), ShapeError);
}

TEST_CASE("the matrix has one record per cell and one trace per trial") {
  const Dataset data = one_well_dataset(160);
  BenchPlan plan;
  plan.gap_sizes = {6, 9};
  plan.trials_per_size = 3;
  const auto configs = fast_configs({ModelKind::Ols, ModelKind::Rf});

  const BenchResult result = run_benchmark(data, plan, configs, 1);
  CHECK(result.records.size() == 2 * 3 * 2);  // sizes x trials x models
  CHECK(result.traces.size() == 2 * 3);
  CHECK(result.well_id == "W");
  CHECK_FALSE(result.any_failed);

  for (const EvalRecord& r : result.records) {
    CHECK(r.ok);
    CHECK(r.mae >= 0.0);
    CHECK(r.mae <= 1.0);
  }
  for (const GapPredictionTrace& trace : result.traces) {
    CHECK(trace.depths.size() == static_cast<std::size_t>(trace.truth.size()));
    REQUIRE(trace.predictions.size() == 2);
    CHECK(trace.predictions[0].first == ModelKind::Ols);
    CHECK(trace.predictions[1].first == ModelKind::Rf);
  }
}

TEST_CASE("two runs with one seed are identical, timings aside") {
  const Dataset data = one_well_dataset(150);
  BenchPlan plan;
  plan.gap_sizes = {8};
  plan.trials_per_size = 4;
  const auto configs = fast_configs({ModelKind::Ols, ModelKind::Ann});

  const BenchResult a = run_benchmark(data, plan, configs, 99);
  const BenchResult b = run_benchmark(data, plan, configs, 99);
  CHECK(same_records_ignoring_timings(a.records, b.records));
  REQUIRE(a.traces.size() == b.traces.size());
  for (std::size_t i = 0; i < a.traces.size(); ++i) {
    CHECK(a.traces[i].depths == b.traces[i].depths);
    CHECK(a.traces[i].truth == b.traces[i].truth);
    for (std::size_t m = 0; m < a.traces[i].predictions.size(); ++m) {
      CHECK(a.traces[i].predictions[m].second == b.traces[i].predictions[m].second);
    }
  }
}

TEST_CASE("the enable order does not change any model's numbers") {
  const Dataset data = one_well_dataset(140);
  BenchPlan plan;
  plan.gap_sizes = {7};
  plan.trials_per_size = 3;

  const BenchResult forward =
      run_benchmark(data, plan, fast_configs({ModelKind::Ols, ModelKind::Rf}), 5);
  const BenchResult reversed =
      run_benchmark(data, plan, fast_configs({ModelKind::Rf, ModelKind::Ols}), 5);
  CHECK(same_records_ignoring_timings(forward.records, reversed.records));
}

TEST_CASE("failing cells are recorded and the run continues") {
  const Dataset data = one_well_dataset(20);
  BenchPlan plan;
  plan.gap_sizes = {18};  // leaves 2 training rows: OLS needs 5
  plan.trials_per_size = 2;
  const auto configs = fast_configs({ModelKind::Ols, ModelKind::Rf});

  const BenchResult result = run_benchmark(data, plan, configs, 3);
  CHECK(result.any_failed);
  REQUIRE(result.records.size() == 4);
  for (const EvalRecord& r : result.records) {
    if (r.model == ModelKind::Ols) {
      CHECK_FALSE(r.ok);
      CHECK(std::isnan(r.mae));
      CHECK(r.error.find("rows") != std::string::npos);
    } else {
      CHECK(r.ok);  // the forest still fits two rows
    }
  }
}

TEST_CASE("training rows never overlap the masked rows") {
  const Dataset data = one_well_dataset(200);
  BenchPlan plan;
  plan.gap_sizes = {16, 66};
  plan.trials_per_size = 6;
  const WellLog& well = data.wells.front();
  for (const GapTrial& trial : generate_trials(well, plan)) {
    const TrainTestSplit split = make_split(well, trial, plan);
    std::set<Index> train(split.train_indices.begin(), split.train_indices.end());
    for (Index i : split.test_indices) {
      CHECK(train.count(i) == 0);
    }
  }
}

TEST_CASE("summaries group by model and size with oracle quartiles") {
  std::vector<EvalRecord> records;
  Rng rng(77);
  std::vector<double> maes;
  for (int trial = 0; trial < 30; ++trial) {
    EvalRecord r;
    r.model = ModelKind::Ols;
    r.gap_size = 16;
    r.trial_id = trial;
    r.mae = rng.uniform(0.001, 0.05);
    maes.push_back(r.mae);
    records.push_back(r);

    EvalRecord constant = r;
    constant.model = ModelKind::Rf;
    constant.mae = 0.05;
    records.push_back(constant);

    EvalRecord other = r;
    other.gap_size = 66;
    other.mae = rng.uniform(0.001, 0.05);
    records.push_back(other);
  }

  const auto rows = summarize(records);
  REQUIRE(rows.size() == 3);  // (OLS,16), (OLS,66), (RF,16)

  const auto find_row = [&](ModelKind model, int size) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& r) {
      return r.model == model && r.gap_size == size;
    });
    REQUIRE(it != rows.end());
    return *it;
  };

  const SummaryRow ols16 = find_row(ModelKind::Ols, 16);
  CHECK(ols16.n == 30);
  CHECK(ols16.q25 == doctest::Approx(oracles::quantile(maes, 0.25)));
  CHECK(ols16.median == doctest::Approx(oracles::quantile(maes, 0.5)));
  CHECK(ols16.q75 == doctest::Approx(oracles::quantile(maes, 0.75)));
  CHECK(ols16.min <= ols16.q25);
  CHECK(ols16.q25 <= ols16.median);
  CHECK(ols16.median <= ols16.q75);
  CHECK(ols16.q75 <= ols16.max);

  const SummaryRow rf16 = find_row(ModelKind::Rf, 16);
  CHECK(rf16.min == doctest::Approx(0.05));
  CHECK(rf16.max == doctest::Approx(0.05));
  CHECK(rf16.median == doctest::Approx(0.05));

  CHECK_THROWS_AS(summarize({}), ParameterError);
}

TEST_CASE("failed records are excluded from summaries") {
  std::vector<EvalRecord> records(3);
  records[0].model = ModelKind::Ols;
  records[0].mae = 0.1;
  records[1].model = ModelKind::Ols;
  records[1].mae = 0.3;
  records[2].model = ModelKind::Ols;
  records[2].ok = false;
  records[2].mae = std::numeric_limits<double>::quiet_NaN();
  const auto rows = summarize(records);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 2);
  CHECK(rows[0].mean == doctest::Approx(0.2));
}

TEST_CASE("trace depths are the raw depths of the masked rows") {
  const Dataset data = one_well_dataset(100);
  BenchPlan plan;
  plan.gap_sizes = {5};
  plan.trials_per_size = 2;
  const BenchResult result = run_benchmark(data, plan, fast_configs({ModelKind::Ols}), 8);
  const WellLog& well = data.wells.front();
  for (const GapPredictionTrace& trace : result.traces) {
    REQUIRE(trace.depths.size() == 5);
    // recover the start from the audit records
    const auto record = std::find_if(result.records.begin(), result.records.end(),
                                     [&](const EvalRecord& r) {
                                       return r.trial_id == trace.trial_id &&
                                              r.gap_size == trace.gap_size;
                                     });
    REQUIRE(record != result.records.end());
    for (std::size_t k = 0; k < trace.depths.size(); ++k) {
      CHECK(trace.depths[k] ==
            well.raw_depths[static_cast<std::size_t>(record->start_index) + k]);
    }
  }
}
