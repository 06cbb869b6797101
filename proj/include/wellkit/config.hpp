#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "wellkit/bench.hpp"
#include "wellkit/normalization.hpp"
#include "wellkit/regressor.hpp"

namespace wellkit {

/// Everything a command run needs, serializable as key=value lines. Every
/// command writes its effective configuration beside its outputs so a run
/// can be reproduced from that file alone.
struct RunConfig {
  std::vector<std::string> inputs;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 1729;
  NormalizationMode mode = NormalizationMode::Strict;
  double sentinel = -999.25;
  double gap_threshold = 0.2;
  std::size_t histogram_bins = 30;

  // benchmark plan
  std::string well;  // empty -> auto-select
  std::vector<int> sizes{16, 66, 168};
  int trials = 30;
  std::string target = "nphi";
  std::vector<std::string> features{"depth", "rhob", "dt", "gr"};

  ModelConfigs models;

  // gap filling
  std::string fill_well;
  std::string fill_model = "ols";
};

/// Applies one key=value entry; throws ParameterError on unknown keys or
/// unparseable values.
void apply_config_entry(RunConfig& config, std::string_view key, std::string_view value);

void merge_config_file(RunConfig& config, const std::filesystem::path& path);

void write_effective_config(const RunConfig& config, std::ostream& out);
void write_effective_config_file(const RunConfig& config, const std::filesystem::path& path);

BenchPlan to_bench_plan(const RunConfig& config);

}  // namespace wellkit
