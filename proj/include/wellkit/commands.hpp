#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wellkit/config.hpp"
#include "wellkit/csv.hpp"
#include "wellkit/eval.hpp"
#include "wellkit/gaps.hpp"
#include "wellkit/normalization.hpp"

namespace wellkit {

/// Parses the configured inputs (CSV and/or LAS), fits the normalization
/// manifest on the merged dataset, and persists the canonical dataset,
/// manifest, parse report, and effective config under out_dir.
struct IngestOutcome {
  ParseReport report;
  std::size_t well_count = 0;
  std::filesystem::path dataset_csv;
  std::filesystem::path manifest_path;  // empty when the dataset was empty
  std::filesystem::path report_path;
};
IngestOutcome cmd_ingest(const RunConfig& config);

/// Detects gaps over every well and writes the gap listing, the statistics
/// block, and (when gaps exist) the log-scale and linear-zoom histograms.
struct GapsOutcome {
  std::size_t gap_count = 0;
  std::optional<GapStats> stats;
  std::filesystem::path gaps_csv;
  std::filesystem::path stats_path;
  std::filesystem::path hist_log_csv;     // empty when no gaps
  std::filesystem::path hist_linear_csv;  // empty when no gaps
};
GapsOutcome cmd_gaps(const RunConfig& config);

/// Runs the benchmark matrix and writes results, summary, a trials audit
/// file, and one trace per trial.
struct BenchOutcome {
  BenchResult result;
  std::vector<SummaryRow> summary;
  std::filesystem::path results_csv;
  std::filesystem::path summary_csv;
  std::filesystem::path trials_csv;
  std::filesystem::path trace_dir;
};
BenchOutcome cmd_bench(const RunConfig& config);

/// Fills every detected gap of the configured well with model predictions
/// on the well's modal depth grid.
struct FillOutcome {
  std::size_t gap_count = 0;
  std::size_t imputed_points = 0;
  double grid_step = 0.0;
  std::filesystem::path fill_csv;
};
FillOutcome cmd_fill(const RunConfig& config);

/// Resolves the configured inputs into a dataset; a directory input means
/// the canonical pair (dataset.csv + manifest.txt) inside it.
struct LoadedDataset {
  Dataset dataset;
  std::optional<NormalizationManifest> manifest;
};
LoadedDataset load_input_dataset(const RunConfig& config);

}  // namespace wellkit
