#include "wellkit/regressor.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/text.hpp"

namespace wellkit {

namespace {

constexpr std::string_view kModelMagic = "wellkit-model";
constexpr int kModelVersion = 1;

void write_vector(std::ostream& out, std::string_view label, const Vector& v) {
  out << label << ' ' << v.size();
  for (Index i = 0; i < v.size(); ++i) out << ' ' << format_double(v(i));
  out << '\n';
}

void write_matrix(std::ostream& out, std::string_view label, const Matrix& m) {
  out << label << ' ' << m.rows() << ' ' << m.cols();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) out << ' ' << format_double(m(i, j));
  }
  out << '\n';
}

class TokenReader {
 public:
  explicit TokenReader(std::istream& in) : in_(in) {}

  std::string word() {
    std::string w;
    if (!(in_ >> w)) throw FormatError("model dump: unexpected end of input");
    return w;
  }

  void expect(std::string_view label) {
    const std::string w = word();
    if (w != label) {
      throw FormatError("model dump: expected '" + std::string(label) + "', got '" + w + "'");
    }
  }

  long integer() {
    const std::string w = word();
    try {
      return std::stol(w);
    } catch (const std::exception&) {
      throw FormatError("model dump: expected integer, got '" + w + "'");
    }
  }

  std::uint64_t unsigned_integer() {
    const std::string w = word();
    try {
      return std::stoull(w);
    } catch (const std::exception&) {
      throw FormatError("model dump: expected unsigned integer, got '" + w + "'");
    }
  }

  double number() {
    const auto v = try_parse_double(word());
    if (!v) throw FormatError("model dump: expected number");
    return *v;
  }

  Vector vector(std::string_view label) {
    expect(label);
    const long n = integer();
    Vector v(n);
    for (long i = 0; i < n; ++i) v(i) = number();
    return v;
  }

  Matrix matrix(std::string_view label) {
    expect(label);
    const long rows = integer();
    const long cols = integer();
    Matrix m(rows, cols);
    for (long i = 0; i < rows; ++i) {
      for (long j = 0; j < cols; ++j) m(i, j) = number();
    }
    return m;
  }

 private:
  std::istream& in_;
};

template <typename State>
const State& require_fitted(const std::optional<State>& state, ModelKind kind) {
  if (!state) {
    throw NotFittedError(std::string(model_name(kind)) + ": predict called before fit");
  }
  return *state;
}

class OlsRegressor final : public Regressor {
 public:
  OlsRegressor() = default;
  explicit OlsRegressor(OlsState state) : state_(std::move(state)) {}

  ModelKind kind() const override { return ModelKind::Ols; }
  bool fitted() const override { return state_.has_value(); }

  void fit(const Matrix& X, const Vector& y, std::uint64_t) override { state_ = ols_fit(X, y); }

  Vector predict(const Matrix& X) const override {
    return ols_predict(require_fitted(state_, kind()), X);
  }

  void save(std::ostream& out) const override {
    const OlsState& s = require_fitted(state_, kind());
    out << "intercept " << format_double(s.intercept) << '\n';
    write_vector(out, "weights", s.weights);
    out << "rank " << s.rank << '\n';
  }

  static OlsState load_state(TokenReader& r) {
    OlsState s;
    r.expect("intercept");
    s.intercept = r.number();
    s.weights = r.vector("weights");
    r.expect("rank");
    s.rank = r.integer();
    s.rank_deficient = s.rank < s.weights.size() + 1;
    return s;
  }

  const OlsState& state() const { return require_fitted(state_, kind()); }

 private:
  std::optional<OlsState> state_;
};

class BrrRegressor final : public Regressor {
 public:
  explicit BrrRegressor(BrrConfig config = {}) : config_(config) {}
  BrrRegressor(BrrConfig config, BrrState state) : config_(config), state_(std::move(state)) {}

  ModelKind kind() const override { return ModelKind::Brr; }
  bool fitted() const override { return state_.has_value(); }

  void fit(const Matrix& X, const Vector& y, std::uint64_t) override {
    state_ = brr_fit(X, y, config_);
  }

  Vector predict(const Matrix& X) const override {
    return brr_predict(require_fitted(state_, kind()), X);
  }

  void save(std::ostream& out) const override {
    const BrrState& s = require_fitted(state_, kind());
    out << "intercept " << format_double(s.intercept) << '\n';
    write_vector(out, "weights", s.weights);
    out << "alpha " << format_double(s.alpha) << '\n';
    out << "lambda " << format_double(s.lambda) << '\n';
    out << "iterations " << s.iterations_run << '\n';
  }

  static BrrState load_state(TokenReader& r) {
    BrrState s;
    r.expect("intercept");
    s.intercept = r.number();
    s.weights = r.vector("weights");
    r.expect("alpha");
    s.alpha = r.number();
    r.expect("lambda");
    s.lambda = r.number();
    r.expect("iterations");
    s.iterations_run = static_cast<int>(r.integer());
    return s;
  }

  const BrrState& state() const { return require_fitted(state_, kind()); }

 private:
  BrrConfig config_;
  std::optional<BrrState> state_;
};

class RansacRegressor final : public Regressor {
 public:
  explicit RansacRegressor(RansacConfig config = {}) : config_(config) {}
  RansacRegressor(RansacConfig config, RansacState state)
      : config_(config), state_(std::move(state)) {}

  ModelKind kind() const override { return ModelKind::Ransac; }
  bool fitted() const override { return state_.has_value(); }

  void fit(const Matrix& X, const Vector& y, std::uint64_t seed) override {
    state_ = ransac_fit(X, y, config_, seed);
  }

  Vector predict(const Matrix& X) const override {
    return ransac_predict(require_fitted(state_, kind()), X);
  }

  void save(std::ostream& out) const override {
    const RansacState& s = require_fitted(state_, kind());
    out << "intercept " << format_double(s.base.intercept) << '\n';
    write_vector(out, "weights", s.base.weights);
    out << "trials " << s.trials_run << '\n';
    out << "inliers " << s.inlier_mask.size();
    for (bool b : s.inlier_mask) out << ' ' << (b ? 1 : 0);
    out << '\n';
  }

  static RansacState load_state(TokenReader& r) {
    RansacState s;
    r.expect("intercept");
    s.base.intercept = r.number();
    s.base.weights = r.vector("weights");
    s.base.rank = s.base.weights.size() + 1;
    r.expect("trials");
    s.trials_run = static_cast<int>(r.integer());
    r.expect("inliers");
    const long n = r.integer();
    s.inlier_mask.resize(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) s.inlier_mask[static_cast<std::size_t>(i)] = r.integer() != 0;
    return s;
  }

  const RansacState& state() const { return require_fitted(state_, kind()); }

 private:
  RansacConfig config_;
  std::optional<RansacState> state_;
};

class RfRegressor final : public Regressor {
 public:
  explicit RfRegressor(ForestConfig config = {}) : config_(config) {}
  RfRegressor(ForestConfig config, ForestState state)
      : config_(config), state_(std::move(state)) {}

  ModelKind kind() const override { return ModelKind::Rf; }
  bool fitted() const override { return state_.has_value(); }

  void fit(const Matrix& X, const Vector& y, std::uint64_t seed) override {
    state_ = rf_fit(X, y, config_, seed);
  }

  Vector predict(const Matrix& X) const override {
    return rf_predict(require_fitted(state_, kind()), X);
  }

  void save(std::ostream& out) const override {
    const ForestState& s = require_fitted(state_, kind());
    out << "n_features " << s.n_features << '\n';
    out << "trees " << s.trees.size() << '\n';
    for (std::size_t t = 0; t < s.trees.size(); ++t) {
      const RegressionTree& tree = s.trees[t];
      out << "tree " << s.bootstrap_seeds[t] << ' ' << tree.nodes.size() << '\n';
      for (const TreeNode& node : tree.nodes) {
        out << node.feature << ' ' << format_double(node.threshold) << ' ' << node.left << ' '
            << node.right << ' ' << format_double(node.value) << '\n';
      }
    }
  }

  static ForestState load_state(TokenReader& r) {
    ForestState s;
    r.expect("n_features");
    s.n_features = r.integer();
    r.expect("trees");
    const long n_trees = r.integer();
    for (long t = 0; t < n_trees; ++t) {
      r.expect("tree");
      s.bootstrap_seeds.push_back(r.unsigned_integer());
      const long n_nodes = r.integer();
      RegressionTree tree;
      tree.nodes.reserve(static_cast<std::size_t>(n_nodes));
      for (long i = 0; i < n_nodes; ++i) {
        TreeNode node;
        node.feature = static_cast<int>(r.integer());
        node.threshold = r.number();
        node.left = static_cast<int>(r.integer());
        node.right = static_cast<int>(r.integer());
        node.value = r.number();
        tree.nodes.push_back(node);
      }
      s.trees.push_back(std::move(tree));
    }
    return s;
  }

  const ForestState& state() const { return require_fitted(state_, kind()); }

 private:
  ForestConfig config_;
  std::optional<ForestState> state_;
};

class AnnRegressor final : public Regressor {
 public:
  explicit AnnRegressor(MlpConfig config = {}) : config_(config) {}
  AnnRegressor(MlpConfig config, MlpState state) : config_(config), state_(std::move(state)) {}

  ModelKind kind() const override { return ModelKind::Ann; }
  bool fitted() const override { return state_.has_value(); }

  void fit(const Matrix& X, const Vector& y, std::uint64_t seed) override {
    state_ = mlp_fit(X, y, config_, seed);
  }

  Vector predict(const Matrix& X) const override {
    return mlp_predict(require_fitted(state_, kind()), X);
  }

  void save(std::ostream& out) const override {
    const MlpState& s = require_fitted(state_, kind());
    write_matrix(out, "w1", s.params.w1);
    write_vector(out, "b1", s.params.b1);
    write_vector(out, "w2", s.params.w2);
    out << "b2 " << format_double(s.params.b2) << '\n';
  }

  static MlpState load_state(TokenReader& r) {
    MlpState s;
    s.params.w1 = r.matrix("w1");
    s.params.b1 = r.vector("b1");
    s.params.w2 = r.vector("w2");
    r.expect("b2");
    s.params.b2 = r.number();
    return s;
  }

  const MlpState& state() const { return require_fitted(state_, kind()); }

 private:
  MlpConfig config_;
  std::optional<MlpState> state_;
};

}  // namespace

std::string_view model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::Ols: return "OLS";
    case ModelKind::Brr: return "BRR";
    case ModelKind::Ransac: return "RANSAC";
    case ModelKind::Rf: return "RF";
    case ModelKind::Ann: return "ANN";
  }
  return "?";
}

std::optional<ModelKind> model_from_name(std::string_view name) {
  const std::string lower = to_lower(trim(name));
  for (ModelKind kind : kAllModels) {
    if (lower == to_lower(model_name(kind))) return kind;
  }
  return std::nullopt;
}

bool ModelConfigs::is_enabled(ModelKind kind) const {
  return std::find(enabled.begin(), enabled.end(), kind) != enabled.end();
}

std::unique_ptr<Regressor> make_regressor(ModelKind kind, const ModelConfigs& configs) {
  switch (kind) {
    case ModelKind::Ols: return std::make_unique<OlsRegressor>();
    case ModelKind::Brr: return std::make_unique<BrrRegressor>(configs.brr);
    case ModelKind::Ransac: return std::make_unique<RansacRegressor>(configs.ransac);
    case ModelKind::Rf: return std::make_unique<RfRegressor>(configs.rf);
    case ModelKind::Ann: return std::make_unique<AnnRegressor>(configs.ann);
  }
  throw ParameterError("unknown model kind");
}

void save_model(const Regressor& model, std::ostream& out) {
  out << kModelMagic << ' ' << kModelVersion << '\n';
  out << "kind " << model.name() << '\n';
  model.save(out);
}

void save_model_file(const Regressor& model, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path.string());
  save_model(model, out);
}

std::unique_ptr<Regressor> load_model(std::istream& in) {
  TokenReader r(in);
  r.expect(kModelMagic);
  const long version = r.integer();
  if (version != kModelVersion) {
    throw FormatError("model dump: unsupported version " + std::to_string(version));
  }
  r.expect("kind");
  const auto kind = model_from_name(r.word());
  if (!kind) throw FormatError("model dump: unknown model kind");
  switch (*kind) {
    case ModelKind::Ols: return std::make_unique<OlsRegressor>(OlsRegressor::load_state(r));
    case ModelKind::Brr:
      return std::make_unique<BrrRegressor>(BrrConfig{}, BrrRegressor::load_state(r));
    case ModelKind::Ransac:
      return std::make_unique<RansacRegressor>(RansacConfig{}, RansacRegressor::load_state(r));
    case ModelKind::Rf:
      return std::make_unique<RfRegressor>(ForestConfig{}, RfRegressor::load_state(r));
    case ModelKind::Ann:
      return std::make_unique<AnnRegressor>(MlpConfig{}, AnnRegressor::load_state(r));
  }
  throw FormatError("model dump: unknown model kind");
}

std::unique_ptr<Regressor> load_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open file: " + path.string());
  return load_model(in);
}

}  // namespace wellkit
