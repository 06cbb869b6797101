#include "wellkit/mlp.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/rng.hpp"

namespace wellkit {

namespace {

/// Adam accumulator for one parameter block.
struct Moments {
  Eigen::ArrayXXd m;
  Eigen::ArrayXXd v;

  Moments(Index rows, Index cols)
      : m(Eigen::ArrayXXd::Zero(rows, cols)), v(Eigen::ArrayXXd::Zero(rows, cols)) {}

  template <typename Param, typename Grad>
  void apply(Param& param, const Grad& grad, const MlpConfig& cfg, long t) {
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * grad.array();
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * grad.array().square();
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    param -= (cfg.step * (m / bc1) / ((v / bc2).sqrt() + cfg.epsilon)).matrix();
  }
};

struct ScalarMoments {
  double m = 0.0;
  double v = 0.0;

  void apply(double& param, double grad, const MlpConfig& cfg, long t) {
    m = cfg.beta1 * m + (1.0 - cfg.beta1) * grad;
    v = cfg.beta2 * v + (1.0 - cfg.beta2) * grad * grad;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    param -= cfg.step * (m / bc1) / (std::sqrt(v / bc2) + cfg.epsilon);
  }
};

Matrix gather_rows(const Matrix& X, const std::vector<Index>& rows, std::size_t begin,
                   std::size_t end) {
  Matrix out(static_cast<Index>(end - begin), X.cols());
  for (std::size_t i = begin; i < end; ++i) {
    out.row(static_cast<Index>(i - begin)) = X.row(rows[i]);
  }
  return out;
}

Vector gather(const Vector& y, const std::vector<Index>& rows, std::size_t begin,
              std::size_t end) {
  Vector out(static_cast<Index>(end - begin));
  for (std::size_t i = begin; i < end; ++i) {
    out(static_cast<Index>(i - begin)) = y(rows[i]);
  }
  return out;
}

}  // namespace

MlpParams mlp_zero_params(Index n_features, int hidden) {
  MlpParams p;
  p.w1 = Matrix::Zero(hidden, n_features);
  p.b1 = Vector::Zero(hidden);
  p.w2 = Vector::Zero(hidden);
  p.b2 = 0.0;
  return p;
}

Vector mlp_forward(const MlpParams& params, const Matrix& X) {
  if (X.cols() != params.w1.cols()) {
    throw ShapeError("mlp_forward: expected " + std::to_string(params.w1.cols()) +
                     " feature columns, got " + std::to_string(X.cols()));
  }
  const Matrix z1 = (X * params.w1.transpose()).rowwise() + params.b1.transpose();
  const Matrix a1 = z1.cwiseMax(0.0);
  return ((a1 * params.w2).array() + params.b2).matrix();
}

double mlp_loss(const MlpParams& params, const Matrix& X, const Vector& y) {
  return (mlp_forward(params, X) - y).squaredNorm() / static_cast<double>(X.rows());
}

MlpGradients mlp_gradients(const MlpParams& params, const Matrix& X, const Vector& y) {
  const Index n = X.rows();
  const Matrix z1 = (X * params.w1.transpose()).rowwise() + params.b1.transpose();
  const Matrix a1 = z1.cwiseMax(0.0);
  const Vector out = ((a1 * params.w2).array() + params.b2).matrix();

  // d(mse)/d(out)
  const Vector d_out = 2.0 / static_cast<double>(n) * (out - y);

  MlpGradients g;
  g.w2 = a1.transpose() * d_out;
  g.b2 = d_out.sum();
  const Matrix d_a1 = d_out * params.w2.transpose();
  const Matrix d_z1 = d_a1.cwiseProduct((z1.array() > 0.0).cast<double>().matrix());
  g.w1 = d_z1.transpose() * X;
  g.b1 = d_z1.colwise().sum();
  return g;
}

MlpState mlp_fit(const Matrix& X, const Vector& y, const MlpConfig& config, std::uint64_t seed) {
  const Index n = X.rows();
  const Index p = X.cols();
  if (y.size() != n) {
    throw ShapeError("mlp_fit: X has " + std::to_string(n) + " rows but y has " +
                     std::to_string(y.size()));
  }
  if (n < 2) throw InsufficientDataError("mlp_fit: need at least 2 rows");
  if (config.hidden < 1) throw ParameterError("mlp_fit: hidden must be >= 1");
  if (config.epochs < 0) throw ParameterError("mlp_fit: epochs must be >= 0");
  if (!y.allFinite() || !X.allFinite()) {
    throw ParameterError("mlp_fit: inputs must be finite");
  }

  const Index batch =
      config.batch > 0 ? std::min<Index>(config.batch, n) : std::min<Index>(200, n);

  Rng rng(seed);
  MlpState state;
  MlpParams& w = state.params;
  const int hidden = config.hidden;

  // Glorot-uniform init, biases zero; fixed draw order keeps fits seeded
  const double limit1 = std::sqrt(6.0 / static_cast<double>(p + hidden));
  w.w1.resize(hidden, p);
  for (int i = 0; i < hidden; ++i) {
    for (Index j = 0; j < p; ++j) w.w1(i, j) = rng.uniform(-limit1, limit1);
  }
  w.b1 = Vector::Zero(hidden);
  const double limit2 = std::sqrt(6.0 / static_cast<double>(hidden + 1));
  w.w2.resize(hidden);
  for (int i = 0; i < hidden; ++i) w.w2(i) = rng.uniform(-limit2, limit2);
  w.b2 = 0.0;

  Moments m_w1(hidden, p), m_b1(hidden, 1), m_w2(hidden, 1);
  ScalarMoments m_b2;
  long t = 0;

  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});

  state.loss_trace.reserve(static_cast<std::size_t>(config.epochs));
  for (int epoch = 1; epoch <= config.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t start = 0; start < order.size(); start += static_cast<std::size_t>(batch)) {
      const std::size_t stop = std::min(order.size(), start + static_cast<std::size_t>(batch));
      const Matrix xb = gather_rows(X, order, start, stop);
      const Vector yb = gather(y, order, start, stop);
      const MlpGradients g = mlp_gradients(w, xb, yb);
      ++t;
      m_w1.apply(w.w1, g.w1, config, t);
      m_b1.apply(w.b1, g.b1, config, t);
      m_w2.apply(w.w2, g.w2, config, t);
      m_b2.apply(w.b2, g.b2, config, t);
    }
    const double loss = mlp_loss(w, X, y);
    if (!std::isfinite(loss)) {
      throw NumericError("mlp_fit: non-finite loss at epoch " + std::to_string(epoch));
    }
    state.loss_trace.push_back(loss);
  }
  return state;
}

Vector mlp_predict(const MlpState& state, const Matrix& X) {
  return mlp_forward(state.params, X);
}

}  // namespace wellkit
