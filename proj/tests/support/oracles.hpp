// Independent reference implementations the tests check the library
// against. Everything here recomputes results from first principles and
// stays off the library's code paths.
#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "wellkit/mlp.hpp"
#include "wellkit/types.hpp"

namespace oracles {

/// Quantile by explicit closest-rank interpolation.
inline double quantile(std::vector<double> values, double p) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double h = p * static_cast<double>(n - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = static_cast<std::size_t>(std::ceil(h));
  return values[lo] + (h - std::floor(h)) * (values[hi] - values[lo]);
}

inline double mean(const std::vector<double>& values) {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

inline double sample_std(const std::vector<double>& values) {
  if (values.size() < 2) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

/// Least squares through the SVD pseudo-inverse of the augmented design
/// matrix; returns [intercept, weights...].
inline Eigen::VectorXd pinv_solve(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
  Eigen::MatrixXd design(X.rows(), X.cols() + 1);
  design.col(0).setOnes();
  design.rightCols(X.cols()) = X;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd singular = svd.singularValues();
  const double cutoff = 1e-12 * singular(0);
  Eigen::VectorXd inv_singular = singular;
  for (Eigen::Index i = 0; i < singular.size(); ++i) {
    inv_singular(i) = singular(i) > cutoff ? 1.0 / singular(i) : 0.0;
  }
  return svd.matrixV() * inv_singular.asDiagonal() * svd.matrixU().transpose() * y;
}

/// Scalar transcription of the evidence-maximization update loop for one
/// feature, written with plain arithmetic.
struct Brr1dResult {
  double weight = 0.0;
  double intercept = 0.0;
  double alpha = 0.0;
  double lambda = 0.0;
};

inline Brr1dResult brr_1d(const std::vector<double>& x, const std::vector<double>& y, double a,
                          double b, int max_iter, double tol, double lambda_init) {
  const auto n = static_cast<double>(x.size());
  const double x_mean = mean(x);
  const double y_mean = mean(y);

  double gram = 0.0, xty = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xc = x[i] - x_mean;
    const double yc = y[i] - y_mean;
    gram += xc * xc;
    xty += xc * yc;
    yy += yc * yc;
  }

  const double y_var = yy / n;
  double alpha = y_var > 0.0 ? 1.0 / y_var : 1.0;
  double lambda = lambda_init;
  double m = 0.0, m_prev = 0.0;

  for (int it = 1; it <= max_iter; ++it) {
    const double s = 1.0 / (lambda + alpha * gram);
    m = alpha * s * xty;
    if (std::abs(m - m_prev) < tol) break;
    const double gamma = 1.0 - lambda * s;
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = (y[i] - y_mean) - (x[i] - x_mean) * m;
      ssr += r * r;
    }
    lambda = (gamma + 2.0 * a) / (m * m + 2.0 * b);
    alpha = (n - gamma + 2.0 * a) / (ssr + 2.0 * b);
    m_prev = m;
  }
  return Brr1dResult{m, y_mean - x_mean * m, alpha, lambda};
}

/// Exhaustive regression-tree reference: tries every (feature, midpoint)
/// split, recomputing child errors directly.
struct OracleTree {
  int feature = -1;  // -1 -> leaf
  double threshold = 0.0;
  double value = 0.0;
  std::unique_ptr<OracleTree> left;
  std::unique_ptr<OracleTree> right;

  double predict(const Eigen::RowVectorXd& row) const {
    if (feature < 0) return value;
    return row(feature) <= threshold ? left->predict(row) : right->predict(row);
  }
};

inline double subset_sse(const Eigen::VectorXd& y, const std::vector<Eigen::Index>& rows) {
  double m = 0.0;
  for (auto r : rows) m += y(r);
  m /= static_cast<double>(rows.size());
  double sse = 0.0;
  for (auto r : rows) sse += (y(r) - m) * (y(r) - m);
  return sse;
}

inline std::unique_ptr<OracleTree> grow_oracle_tree(const Eigen::MatrixXd& X,
                                                    const Eigen::VectorXd& y,
                                                    const std::vector<Eigen::Index>& rows,
                                                    int min_samples_leaf) {
  auto node = std::make_unique<OracleTree>();
  double value = 0.0;
  for (auto r : rows) value += y(r);
  node->value = value / static_cast<double>(rows.size());

  bool pure = true;
  for (auto r : rows) {
    if (y(r) != y(rows.front())) pure = false;
  }
  if (rows.size() < 2 * static_cast<std::size_t>(min_samples_leaf) || pure) return node;

  double best_sse = std::numeric_limits<double>::infinity();
  int best_feature = -1;
  double best_threshold = 0.0;
  for (int feature = 0; feature < X.cols(); ++feature) {
    std::vector<double> values;
    for (auto r : rows) values.push_back(X(r, feature));
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t k = 1; k < values.size(); ++k) {
      const double threshold = values[k - 1] + 0.5 * (values[k] - values[k - 1]);
      if (!(threshold < values[k])) continue;
      std::vector<Eigen::Index> left_rows, right_rows;
      for (auto r : rows) {
        (X(r, feature) <= threshold ? left_rows : right_rows).push_back(r);
      }
      if (left_rows.size() < static_cast<std::size_t>(min_samples_leaf) ||
          right_rows.size() < static_cast<std::size_t>(min_samples_leaf)) {
        continue;
      }
      const double sse = subset_sse(y, left_rows) + subset_sse(y, right_rows);
      if (sse < best_sse) {
        best_sse = sse;
        best_feature = feature;
        best_threshold = threshold;
      }
    }
  }
  if (best_feature < 0) return node;

  std::vector<Eigen::Index> left_rows, right_rows;
  for (auto r : rows) {
    (X(r, best_feature) <= best_threshold ? left_rows : right_rows).push_back(r);
  }
  node->feature = best_feature;
  node->threshold = best_threshold;
  node->left = grow_oracle_tree(X, y, left_rows, min_samples_leaf);
  node->right = grow_oracle_tree(X, y, right_rows, min_samples_leaf);
  return node;
}

/// Central-difference gradient of the network loss with respect to every
/// parameter, h = 1e-5.
inline wellkit::MlpGradients numeric_mlp_gradients(wellkit::MlpParams params,
                                                   const Eigen::MatrixXd& X,
                                                   const Eigen::VectorXd& y, double h = 1e-5) {
  wellkit::MlpGradients g;
  const auto probe = [&](double& slot) {
    const double keep = slot;
    slot = keep + h;
    const double up = wellkit::mlp_loss(params, X, y);
    slot = keep - h;
    const double down = wellkit::mlp_loss(params, X, y);
    slot = keep;
    return (up - down) / (2.0 * h);
  };

  g.w1.resize(params.w1.rows(), params.w1.cols());
  for (Eigen::Index i = 0; i < params.w1.rows(); ++i) {
    for (Eigen::Index j = 0; j < params.w1.cols(); ++j) g.w1(i, j) = probe(params.w1(i, j));
  }
  g.b1.resize(params.b1.size());
  for (Eigen::Index i = 0; i < params.b1.size(); ++i) g.b1(i) = probe(params.b1(i));
  g.w2.resize(params.w2.size());
  for (Eigen::Index i = 0; i < params.w2.size(); ++i) g.w2(i) = probe(params.w2(i));
  g.b2 = probe(params.b2);
  return g;
}

/// Brute-force gap scan: lengths of consecutive differences above the
/// threshold (same one-nanometer decimal slack the contract defines).
inline std::vector<double> scan_gap_lengths(const std::vector<double>& depths, double threshold) {
  std::vector<double> lengths;
  for (std::size_t i = 1; i < depths.size(); ++i) {
    if (depths[i] - depths[i - 1] > threshold + 1e-9) {
      lengths.push_back(depths[i] - depths[i - 1]);
    }
  }
  return lengths;
}

/// Upper chi-square quantile via the Wilson-Hilferty cube approximation.
inline double chi_square_critical(double df, double z) {
  const double t = 2.0 / (9.0 * df);
  const double c = 1.0 - t + z * std::sqrt(t);
  return df * c * c * c;
}

}  // namespace oracles
