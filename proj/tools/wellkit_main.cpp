#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "wellkit/commands.hpp"
#include "wellkit/config.hpp"
#include "wellkit/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitSchemaError = 2;
constexpr int kExitParameterError = 3;
constexpr int kExitCellFailures = 4;

struct CliArgs {
  wellkit::RunConfig config;
  std::string config_file;
  std::vector<std::string> inputs;
  std::vector<std::string> overrides;  // key=value
  std::string out;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool strict = false;
  bool lenient = false;
  double threshold = 0.0;
  bool threshold_set = false;
  double sentinel = 0.0;
  bool sentinel_set = false;
  std::string well;
  std::string sizes;
  int trials = 0;
  std::string models;
  std::string target;
  std::string features;
  std::string fill_model;
};

/// file < flags; flags win because they are applied afterwards.
void resolve(CliArgs& args) {
  if (!args.config_file.empty()) {
    wellkit::merge_config_file(args.config, args.config_file);
  }
  for (const std::string& input : args.inputs) {
    wellkit::apply_config_entry(args.config, "input", input);
  }
  if (!args.out.empty()) wellkit::apply_config_entry(args.config, "out", args.out);
  if (args.seed_set) wellkit::apply_config_entry(args.config, "seed", std::to_string(args.seed));
  if (args.strict) wellkit::apply_config_entry(args.config, "mode", "strict");
  if (args.lenient) wellkit::apply_config_entry(args.config, "mode", "lenient");
  if (args.threshold_set) {
    wellkit::apply_config_entry(args.config, "threshold", std::to_string(args.threshold));
  }
  if (args.sentinel_set) {
    wellkit::apply_config_entry(args.config, "sentinel", std::to_string(args.sentinel));
  }
  if (!args.well.empty()) wellkit::apply_config_entry(args.config, "well", args.well);
  if (!args.sizes.empty()) wellkit::apply_config_entry(args.config, "sizes", args.sizes);
  if (args.trials > 0) {
    wellkit::apply_config_entry(args.config, "trials", std::to_string(args.trials));
  }
  if (!args.models.empty()) wellkit::apply_config_entry(args.config, "models", args.models);
  if (!args.target.empty()) wellkit::apply_config_entry(args.config, "target", args.target);
  if (!args.features.empty()) wellkit::apply_config_entry(args.config, "features", args.features);
  if (!args.fill_model.empty()) {
    wellkit::apply_config_entry(args.config, "fill.model", args.fill_model);
  }
  for (const std::string& kv : args.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw wellkit::ParameterError("--set expects key=value, got '" + kv + "'");
    }
    wellkit::apply_config_entry(args.config, kv.substr(0, eq), kv.substr(eq + 1));
  }
}

void add_common_options(CLI::App* cmd, CliArgs& args) {
  cmd->add_option("--config", args.config_file, "key=value config file");
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--seed", args.seed, "run seed")->each([&](const std::string&) {
    args.seed_set = true;
  });
  cmd->add_flag("--strict", args.strict, "error on values outside the manifest range");
  cmd->add_flag("--lenient", args.lenient, "clamp values outside the manifest range");
  cmd->add_option("--set", args.overrides, "extra key=value override (repeatable)");
}

int run_ingest(CliArgs& args) {
  resolve(args);
  const auto outcome = wellkit::cmd_ingest(args.config);
  std::cout << "ingest: " << outcome.report.accepted << " records accepted, "
            << outcome.report.dropped << " dropped, " << outcome.well_count << " wells\n";
  std::cout << "wrote " << outcome.dataset_csv.string() << '\n';
  return kExitOk;
}

int run_gaps(CliArgs& args) {
  resolve(args);
  const auto outcome = wellkit::cmd_gaps(args.config);
  if (outcome.gap_count == 0) {
    std::cout << "gaps: no gaps detected\n";
  } else {
    std::cout << "gaps: " << outcome.gap_count << " gaps, stats in "
              << outcome.stats_path.string() << '\n';
  }
  return kExitOk;
}

int run_bench(CliArgs& args) {
  resolve(args);
  const auto outcome = wellkit::cmd_bench(args.config);
  std::size_t failed = 0;
  for (const auto& record : outcome.result.records) {
    if (!record.ok) ++failed;
  }
  std::cout << "bench: well " << outcome.result.well_id << ", " << outcome.result.records.size()
            << " cells, " << failed << " failed\n";
  std::cout << "wrote " << outcome.results_csv.string() << '\n';
  return failed > 0 ? kExitCellFailures : kExitOk;
}

int run_fill(CliArgs& args) {
  // on this subcommand --well names the fill target, not the bench well
  const std::string well_flag = args.well;
  args.well.clear();
  resolve(args);
  if (!well_flag.empty()) args.config.fill_well = well_flag;
  const auto outcome = wellkit::cmd_fill(args.config);
  if (outcome.gap_count == 0) {
    std::cout << "fill: well " << args.config.fill_well << " has no gaps; nothing to fill\n";
  } else {
    std::cout << "fill: " << outcome.imputed_points << " points over " << outcome.gap_count
              << " gaps at step " << outcome.grid_step << '\n';
  }
  std::cout << "wrote " << outcome.fill_csv.string() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-log toolkit: ingestion, gap analysis, imputation benchmark"};
  app.require_subcommand(1);
  CliArgs args;

  auto* ingest = app.add_subcommand("ingest", "parse logs into the canonical dataset");
  ingest->add_option("inputs", args.inputs, "CSV or LAS files");
  ingest->add_option("--sentinel", args.sentinel, "null sentinel value")
      ->each([&](const std::string&) { args.sentinel_set = true; });
  add_common_options(ingest, args);

  auto* gaps = app.add_subcommand("gaps", "detect and describe depth gaps");
  gaps->add_option("--data", args.inputs, "canonical dataset directory or CSV");
  gaps->add_option("--threshold", args.threshold, "gap threshold in meters")
      ->each([&](const std::string&) { args.threshold_set = true; });
  add_common_options(gaps, args);

  auto* bench = app.add_subcommand("bench", "benchmark models on synthetic gaps");
  bench->add_option("--data", args.inputs, "canonical dataset directory or CSV");
  bench->add_option("--well", args.well, "gapless well to benchmark (default: auto)");
  bench->add_option("--sizes", args.sizes, "comma-separated gap sizes in points");
  bench->add_option("--trials", args.trials, "trials per gap size");
  bench->add_option("--models", args.models, "comma-separated model list");
  bench->add_option("--target", args.target, "target curve");
  bench->add_option("--features", args.features, "comma-separated feature curves");
  add_common_options(bench, args);

  auto* fill = app.add_subcommand("fill", "impute a well's gaps on the depth grid");
  fill->add_option("--data", args.inputs, "canonical dataset directory or CSV");
  fill->add_option("--well", args.well, "well whose gaps to fill");
  fill->add_option("--model", args.fill_model, "model for the imputation (default ols)");
  add_common_options(fill, args);

  CLI11_PARSE(app, argc, argv);

  try {
    if (ingest->parsed()) return run_ingest(args);
    if (gaps->parsed()) return run_gaps(args);
    if (bench->parsed()) return run_bench(args);
    if (fill->parsed()) return run_fill(args);
  } catch (const wellkit::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << '\n';
    return kExitSchemaError;
  } catch (const wellkit::FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kExitSchemaError;
  } catch (const wellkit::ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kExitParameterError;
  } catch (const wellkit::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}
