#include "wellkit/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>

#include "wellkit/errors.hpp"
#include "wellkit/las.hpp"
#include "wellkit/rng.hpp"
#include "wellkit/text.hpp"

namespace fs = std::filesystem;

namespace wellkit {

namespace {

bool has_extension(const fs::path& path, std::string_view ext) {
  return to_lower(path.extension().string()) == ext;
}

void merge_well(Dataset& dataset, WellLog&& incoming) {
  for (WellLog& existing : dataset.wells) {
    if (existing.well_id != incoming.well_id) continue;
    existing.records.insert(existing.records.end(), incoming.records.begin(),
                            incoming.records.end());
    std::sort(existing.records.begin(), existing.records.end(),
              [](const LogRecord& a, const LogRecord& b) { return a.depth < b.depth; });
    for (std::size_t i = 1; i < existing.records.size(); ++i) {
      if (existing.records[i].depth == existing.records[i - 1].depth) {
        throw SchemaError("duplicate record: well " + existing.well_id + " depth " +
                          format_double(existing.records[i].depth));
      }
    }
    existing.raw_depths.clear();
    for (const LogRecord& r : existing.records) existing.raw_depths.push_back(r.depth);
    return;
  }
  dataset.wells.push_back(std::move(incoming));
}

std::ofstream open_output(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  return out;
}

void write_config_beside(const RunConfig& config) {
  write_effective_config_file(config, config.out_dir / "effective_config.txt");
}

/// Well's most common consecutive depth step, ignoring gap-sized jumps.
double modal_depth_step(const WellLog& well, double threshold) {
  std::map<double, std::size_t> buckets;
  for (std::size_t i = 1; i < well.raw_depths.size(); ++i) {
    const double d = well.raw_depths[i] - well.raw_depths[i - 1];
    if (d > threshold) continue;
    buckets[std::round(d * 1e6) / 1e6] += 1;
  }
  if (buckets.empty()) return kNominalDepthStep;
  return std::max_element(buckets.begin(), buckets.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; })
      ->first;
}

}  // namespace

LoadedDataset load_input_dataset(const RunConfig& config) {
  if (config.inputs.empty()) throw ParameterError("no input given");
  const fs::path input(config.inputs.front());

  LoadedDataset out;
  if (fs::is_directory(input)) {
    const fs::path csv = input / "dataset.csv";
    const fs::path manifest = input / "manifest.txt";
    if (!fs::exists(csv)) throw Error("no dataset.csv in " + input.string());
    if (fs::exists(manifest)) {
      CanonicalDataset canonical = load_canonical(csv, manifest);
      out.dataset = std::move(canonical.dataset);
      out.manifest = std::move(canonical.manifest);
      return out;
    }
    out.dataset = parse_csv_file(csv, CsvOptions{config.sentinel}).dataset;
    return out;
  }

  // file input: optional manifest as the second input
  if (config.inputs.size() > 1) {
    CanonicalDataset canonical = load_canonical(input, fs::path(config.inputs[1]));
    out.dataset = std::move(canonical.dataset);
    out.manifest = std::move(canonical.manifest);
    return out;
  }
  out.dataset = parse_csv_file(input, CsvOptions{config.sentinel}).dataset;
  return out;
}

IngestOutcome cmd_ingest(const RunConfig& config) {
  if (config.inputs.empty()) throw ParameterError("ingest: no input files given");
  fs::create_directories(config.out_dir);

  IngestOutcome outcome;
  Dataset merged;
  for (const std::string& item : config.inputs) {
    const fs::path path(item);
    if (has_extension(path, ".las")) {
      WellLog well = parse_las_file(path, LasOptions{config.sentinel}, &outcome.report);
      merge_well(merged, std::move(well));
    } else {
      ParseResult parsed = parse_csv_file(path, CsvOptions{config.sentinel});
      outcome.report.merge(parsed.report);
      for (WellLog& well : parsed.dataset.wells) merge_well(merged, std::move(well));
    }
  }
  std::sort(merged.wells.begin(), merged.wells.end(),
            [](const WellLog& a, const WellLog& b) { return a.well_id < b.well_id; });
  outcome.well_count = merged.wells.size();

  outcome.dataset_csv = config.out_dir / "dataset.csv";
  outcome.report_path = config.out_dir / "parse_report.txt";

  if (merged.record_count() == 0) {
    write_csv_file(merged, outcome.dataset_csv);
    auto report = open_output(outcome.report_path);
    write_parse_report(outcome.report, outcome.well_count, report);
    write_config_beside(config);
    return outcome;
  }

  FitOptions fit_options;
  fit_options.widen_constant_coordinates = true;
  const NormalizationManifest manifest = fit_normalization(merged, fit_options);
  std::vector<std::string> warnings;
  const Dataset normalized = apply_normalization(merged, manifest, config.mode, &warnings);
  for (const std::string& w : warnings) outcome.report.notes.push_back(w);

  write_csv_file(normalized, outcome.dataset_csv);
  outcome.manifest_path = config.out_dir / "manifest.txt";
  write_manifest_file(manifest, outcome.manifest_path);
  auto report = open_output(outcome.report_path);
  write_parse_report(outcome.report, outcome.well_count, report);
  write_config_beside(config);
  return outcome;
}

GapsOutcome cmd_gaps(const RunConfig& config) {
  fs::create_directories(config.out_dir);
  const LoadedDataset loaded = load_input_dataset(config);

  GapsOutcome outcome;
  const std::vector<Gap> gaps = detect_gaps(loaded.dataset, config.gap_threshold);
  outcome.gap_count = gaps.size();

  outcome.gaps_csv = config.out_dir / "gaps.csv";
  {
    auto out = open_output(outcome.gaps_csv);
    write_gaps_csv(gaps, out);
  }

  outcome.stats_path = config.out_dir / "gap_stats.txt";
  if (gaps.empty()) {
    auto out = open_output(outcome.stats_path);
    out << "count=0\n";
    write_config_beside(config);
    return outcome;
  }

  outcome.stats = summarize_gaps(gaps);
  {
    auto out = open_output(outcome.stats_path);
    write_gap_stats(*outcome.stats, out);
  }

  outcome.hist_log_csv = config.out_dir / "hist_log10.csv";
  {
    auto out = open_output(outcome.hist_log_csv);
    write_histogram_csv(
        gap_histogram(gaps, HistogramOptions{HistogramScale::Log10, config.histogram_bins}), out);
  }
  outcome.hist_linear_csv = config.out_dir / "hist_linear_zoom.csv";
  {
    auto out = open_output(outcome.hist_linear_csv);
    write_histogram_csv(
        gap_histogram(gaps, HistogramOptions{HistogramScale::Linear, config.histogram_bins}),
        out);
  }
  write_config_beside(config);
  return outcome;
}

BenchOutcome cmd_bench(const RunConfig& config) {
  fs::create_directories(config.out_dir);
  const LoadedDataset loaded = load_input_dataset(config);
  const BenchPlan plan = to_bench_plan(config);

  BenchOutcome outcome;
  outcome.result = run_benchmark(loaded.dataset, plan, config.models, config.seed);

  outcome.results_csv = config.out_dir / "results.csv";
  {
    auto out = open_output(outcome.results_csv);
    write_results_csv(outcome.result, config.models, out);
  }

  const bool any_ok =
      std::any_of(outcome.result.records.begin(), outcome.result.records.end(),
                  [](const EvalRecord& r) { return r.ok; });
  outcome.summary_csv = config.out_dir / "summary.csv";
  if (any_ok) {
    outcome.summary = summarize(outcome.result.records);
    auto out = open_output(outcome.summary_csv);
    write_summary_csv(outcome.summary, config.models, out);
  } else {
    auto out = open_output(outcome.summary_csv);
    write_summary_csv({}, config.models, out);
  }

  const WellLog* well = loaded.dataset.find(outcome.result.well_id);
  outcome.trials_csv = config.out_dir / "trials.csv";
  {
    BenchPlan audit_plan = plan;
    audit_plan.well_id = outcome.result.well_id;
    const auto trials = generate_trials(*well, audit_plan);
    auto out = open_output(outcome.trials_csv);
    write_trials_csv(trials, out);
  }

  outcome.trace_dir = config.out_dir / "traces";
  fs::create_directories(outcome.trace_dir);
  for (const GapPredictionTrace& trace : outcome.result.traces) {
    char name[64];
    std::snprintf(name, sizeof(name), "trace_size%d_trial%02d.csv", trace.gap_size,
                  trace.trial_id);
    auto out = open_output(outcome.trace_dir / name);
    write_trace_csv(trace, out);
  }
  write_config_beside(config);
  return outcome;
}

FillOutcome cmd_fill(const RunConfig& config) {
  fs::create_directories(config.out_dir);
  const LoadedDataset loaded = load_input_dataset(config);
  if (config.fill_well.empty()) throw ParameterError("fill: no well given");

  const WellLog* well = loaded.dataset.find(config.fill_well);
  if (!well) throw ParameterError("unknown well: " + config.fill_well);

  const auto kind = model_from_name(config.fill_model);
  if (!kind) throw ParameterError("unknown model: " + config.fill_model);

  FillOutcome outcome;
  const std::vector<Gap> gaps = detect_gaps(*well, config.gap_threshold);
  outcome.gap_count = gaps.size();
  outcome.grid_step = modal_depth_step(*well, config.gap_threshold);
  outcome.fill_csv = config.out_dir / ("fill_" + well->well_id + ".csv");

  auto out = open_output(outcome.fill_csv);
  out << "# well=" << well->well_id << '\n';
  out << "# model=" << model_name(*kind) << '\n';
  out << "# grid_step=" << format_double(outcome.grid_step) << '\n';
  out << "depth,nphi_pred\n";

  if (gaps.empty()) {
    write_config_beside(config);
    return outcome;  // nothing to fill
  }

  // depth is the lone feature available inside a gap: the sensor curves
  // are missing exactly where the prediction is needed
  const bool normalized = loaded.manifest.has_value();
  Matrix train(well->size(), 1);
  for (Index i = 0; i < well->size(); ++i) {
    train(i, 0) = normalized ? well->records[static_cast<std::size_t>(i)].depth
                             : well->raw_depths[static_cast<std::size_t>(i)];
  }
  const Vector target = well->curve(Curve::Nphi);

  const auto model = make_regressor(*kind, config.models);
  model->fit(train, target, derive_seed(config.seed, {0xF111ULL}));

  for (const Gap& gap : gaps) {
    const auto count = static_cast<std::size_t>(
        std::floor(gap.length() / outcome.grid_step - 1e-9));
    if (count == 0) continue;
    Matrix grid(static_cast<Index>(count), 1);
    std::vector<double> raw(count);
    for (std::size_t k = 0; k < count; ++k) {
      const double depth = gap.depth_before + static_cast<double>(k + 1) * outcome.grid_step;
      raw[k] = depth;
      grid(static_cast<Index>(k), 0) =
          normalized ? loaded.manifest->normalize(Curve::Depth, depth) : depth;
    }
    const Vector pred = model->predict(grid);
    for (std::size_t k = 0; k < count; ++k) {
      out << format_double(raw[k]) << ',' << format_double(pred(static_cast<Index>(k))) << '\n';
    }
    outcome.imputed_points += count;
  }
  write_config_beside(config);
  return outcome;
}

}  // namespace wellkit
