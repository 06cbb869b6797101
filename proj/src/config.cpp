#include "wellkit/config.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/eval.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

double parse_number(std::string_view key, std::string_view value) {
  const auto v = try_parse_double(value);
  if (!v) {
    throw ParameterError("config: key '" + std::string(key) + "' needs a number, got '" +
                         std::string(value) + "'");
  }
  return *v;
}

long parse_integer(std::string_view key, std::string_view value) {
  const double v = parse_number(key, value);
  const long n = static_cast<long>(v);
  if (static_cast<double>(n) != v) {
    throw ParameterError("config: key '" + std::string(key) + "' needs an integer");
  }
  return n;
}

bool parse_bool(std::string_view key, std::string_view value) {
  const std::string v = to_lower(trim(value));
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ParameterError("config: key '" + std::string(key) + "' needs true/false");
}

std::vector<std::string> parse_list(std::string_view value) {
  std::vector<std::string> out;
  for (std::string_view item : split(value, ',')) {
    const std::string_view t = trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

void apply_model_entry(RunConfig& config, std::string_view key, std::string_view value) {
  ModelConfigs& m = config.models;
  if (key == "model.brr.prior_a") m.brr.prior_a = parse_number(key, value);
  else if (key == "model.brr.prior_b") m.brr.prior_b = parse_number(key, value);
  else if (key == "model.brr.max_iter") m.brr.max_iter = static_cast<int>(parse_integer(key, value));
  else if (key == "model.brr.tol") m.brr.tol = parse_number(key, value);
  else if (key == "model.brr.lambda_init") m.brr.lambda_init = parse_number(key, value);
  else if (key == "model.ransac.min_samples") m.ransac.min_samples = static_cast<int>(parse_integer(key, value));
  else if (key == "model.ransac.residual_threshold") {
    m.ransac.residual_threshold =
        to_lower(trim(value)) == "auto" ? -1.0 : parse_number(key, value);
  } else if (key == "model.ransac.max_trials") m.ransac.max_trials = static_cast<int>(parse_integer(key, value));
  else if (key == "model.rf.n_trees") m.rf.n_trees = static_cast<int>(parse_integer(key, value));
  else if (key == "model.rf.max_depth") m.rf.max_depth = static_cast<int>(parse_integer(key, value));
  else if (key == "model.rf.min_samples_leaf") m.rf.min_samples_leaf = static_cast<int>(parse_integer(key, value));
  else if (key == "model.rf.max_features") m.rf.max_features = static_cast<int>(parse_integer(key, value));
  else if (key == "model.rf.bootstrap") m.rf.bootstrap = parse_bool(key, value);
  else if (key == "model.ann.hidden") m.ann.hidden = static_cast<int>(parse_integer(key, value));
  else if (key == "model.ann.epochs") m.ann.epochs = static_cast<int>(parse_integer(key, value));
  else if (key == "model.ann.batch") m.ann.batch = static_cast<int>(parse_integer(key, value));
  else if (key == "model.ann.step") m.ann.step = parse_number(key, value);
  else throw ParameterError("config: unknown key '" + std::string(key) + "'");
}

}  // namespace

void apply_config_entry(RunConfig& config, std::string_view key, std::string_view value) {
  const std::string k = to_lower(trim(key));
  const std::string_view v = trim(value);

  if (k == "input") {
    config.inputs.emplace_back(v);
  } else if (k == "out") {
    config.out_dir = std::string(v);
  } else if (k == "seed") {
    try {
      config.seed = std::stoull(std::string(v));
    } catch (const std::exception&) {
      throw ParameterError("config: key 'seed' needs an unsigned integer");
    }
  } else if (k == "mode") {
    const std::string m = to_lower(v);
    if (m == "strict") config.mode = NormalizationMode::Strict;
    else if (m == "lenient") config.mode = NormalizationMode::Lenient;
    else throw ParameterError("config: mode must be strict or lenient");
  } else if (k == "sentinel") {
    config.sentinel = parse_number(k, v);
  } else if (k == "threshold") {
    config.gap_threshold = parse_number(k, v);
    if (config.gap_threshold <= 0.0) throw ParameterError("config: threshold must be > 0");
  } else if (k == "hist.bins") {
    const long n = parse_integer(k, v);
    if (n < 1) throw ParameterError("config: hist.bins must be >= 1");
    config.histogram_bins = static_cast<std::size_t>(n);
  } else if (k == "well") {
    config.well = std::string(v);
  } else if (k == "sizes") {
    config.sizes.clear();
    for (const std::string& item : parse_list(v)) {
      const long n = parse_integer(k, item);
      if (n < 1) throw ParameterError("config: gap sizes must be >= 1");
      config.sizes.push_back(static_cast<int>(n));
    }
    if (config.sizes.empty()) throw ParameterError("config: sizes must not be empty");
  } else if (k == "trials") {
    const long n = parse_integer(k, v);
    if (n < 1) throw ParameterError("config: trials must be >= 1");
    config.trials = static_cast<int>(n);
  } else if (k == "target") {
    config.target = to_lower(v);
  } else if (k == "features") {
    config.features = parse_list(to_lower(v));
    if (config.features.empty()) throw ParameterError("config: features must not be empty");
  } else if (k == "models") {
    config.models.enabled.clear();
    for (const std::string& item : parse_list(v)) {
      const auto kind = model_from_name(item);
      if (!kind) throw ParameterError("config: unknown model '" + item + "'");
      if (!config.models.is_enabled(*kind)) config.models.enabled.push_back(*kind);
    }
    if (config.models.enabled.empty()) throw ParameterError("config: models must not be empty");
  } else if (k == "fill.well") {
    config.fill_well = std::string(v);
  } else if (k == "fill.model") {
    if (!model_from_name(v)) throw ParameterError("config: unknown model '" + std::string(v) + "'");
    config.fill_model = to_lower(v);
  } else if (k.starts_with("model.")) {
    apply_model_entry(config, k, v);
  } else {
    throw ParameterError("config: unknown key '" + k + "'");
  }
}

void merge_config_file(RunConfig& config, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view trimmed = trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string_view::npos) {
      throw ParameterError("config: line " + std::to_string(line_no) + " is not key=value");
    }
    apply_config_entry(config, trimmed.substr(0, eq), trimmed.substr(eq + 1));
  }
}

void write_effective_config(const RunConfig& config, std::ostream& out) {
  for (const std::string& input : config.inputs) out << "input=" << input << '\n';
  out << "out=" << config.out_dir.string() << '\n';
  out << "seed=" << config.seed << '\n';
  out << "mode=" << (config.mode == NormalizationMode::Strict ? "strict" : "lenient") << '\n';
  out << "sentinel=" << format_double(config.sentinel) << '\n';
  out << "threshold=" << format_double(config.gap_threshold) << '\n';
  out << "hist.bins=" << config.histogram_bins << '\n';
  if (!config.well.empty()) out << "well=" << config.well << '\n';
  out << "sizes=";
  for (std::size_t i = 0; i < config.sizes.size(); ++i) {
    out << (i ? "," : "") << config.sizes[i];
  }
  out << '\n';
  out << "trials=" << config.trials << '\n';
  out << "target=" << config.target << '\n';
  out << "features=";
  for (std::size_t i = 0; i < config.features.size(); ++i) {
    out << (i ? "," : "") << config.features[i];
  }
  out << '\n';
  for (const std::string& line : model_config_lines(config.models)) out << line << '\n';
  if (!config.fill_well.empty()) out << "fill.well=" << config.fill_well << '\n';
  out << "fill.model=" << config.fill_model << '\n';
}

void write_effective_config_file(const RunConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  write_effective_config(config, out);
}

BenchPlan to_bench_plan(const RunConfig& config) {
  BenchPlan plan;
  plan.well_id = config.well;
  plan.gap_sizes = config.sizes;
  plan.trials_per_size = config.trials;
  plan.seed = config.seed;

  const auto target = curve_from_name(config.target);
  if (!target) throw ParameterError("unknown target curve: " + config.target);
  plan.target_curve = *target;

  plan.feature_curves.clear();
  for (const std::string& name : config.features) {
    const auto curve = curve_from_name(name);
    if (!curve) throw ParameterError("unknown feature curve: " + name);
    plan.feature_curves.push_back(*curve);
  }
  return plan;
}

}  // namespace wellkit
