#include "wellkit/bayes.hpp"

#include <cmath>
#include <string>

#include "wellkit/errors.hpp"

namespace wellkit {

BrrState brr_fit(const Matrix& X, const Vector& y, const BrrConfig& config) {
  const Index n = X.rows();
  const Index p = X.cols();
  if (y.size() != n) {
    throw ShapeError("brr_fit: X has " + std::to_string(n) + " rows but y has " +
                     std::to_string(y.size()));
  }
  if (n < 2) throw InsufficientDataError("brr_fit: need at least 2 rows");
  if (config.max_iter < 1) throw ParameterError("brr_fit: max_iter must be >= 1");

  const Eigen::RowVectorXd x_mean = X.colwise().mean();
  const double y_mean = y.mean();
  const Matrix xc = X.rowwise() - x_mean;
  const Vector yc = y.array() - y_mean;

  const double y_var = yc.squaredNorm() / static_cast<double>(n);
  double alpha = y_var > 0.0 ? 1.0 / y_var : 1.0;
  double lambda = config.lambda_init;

  const Matrix gram = xc.transpose() * xc;
  const Vector xty = xc.transpose() * yc;
  const double a = config.prior_a;
  const double b = config.prior_b;

  BrrState state;
  Vector m_prev = Vector::Zero(p);
  Vector m(p);
  int it = 0;
  for (it = 1; it <= config.max_iter; ++it) {
    const Matrix s =
        (lambda * Matrix::Identity(p, p) + alpha * gram).ldlt().solve(Matrix::Identity(p, p));
    m = alpha * (s * xty);
    if (!m.allFinite() || !std::isfinite(alpha) || !std::isfinite(lambda)) {
      throw NumericError("brr_fit: non-finite values at iteration " + std::to_string(it));
    }
    if ((m - m_prev).cwiseAbs().maxCoeff() < config.tol) break;

    const double gamma = static_cast<double>(p) - lambda * s.trace();
    const double ssr = (yc - xc * m).squaredNorm();
    lambda = (gamma + 2.0 * a) / (m.squaredNorm() + 2.0 * b);
    alpha = (static_cast<double>(n) - gamma + 2.0 * a) / (ssr + 2.0 * b);
    m_prev = m;
  }

  state.weights = m;
  state.intercept = y_mean - x_mean.dot(m);
  state.alpha = alpha;
  state.lambda = lambda;
  state.iterations_run = std::min(it, config.max_iter);
  return state;
}

Vector brr_predict(const BrrState& state, const Matrix& X) {
  if (X.cols() != state.weights.size()) {
    throw ShapeError("brr_predict: expected " + std::to_string(state.weights.size()) +
                     " feature columns, got " + std::to_string(X.cols()));
  }
  return (X * state.weights).array() + state.intercept;
}

}  // namespace wellkit
