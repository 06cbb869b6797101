#include "wellkit/ransac.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "wellkit/errors.hpp"
#include "wellkit/rng.hpp"
#include "wellkit/stats.hpp"

namespace wellkit {

namespace {

Matrix gather_rows(const Matrix& X, const std::vector<std::size_t>& rows) {
  Matrix out(static_cast<Index>(rows.size()), X.cols());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.row(static_cast<Index>(i)) = X.row(static_cast<Index>(rows[i]));
  }
  return out;
}

Vector gather(const Vector& y, const std::vector<std::size_t>& rows) {
  Vector out(static_cast<Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out(static_cast<Index>(i)) = y(static_cast<Index>(rows[i]));
  }
  return out;
}

std::vector<std::size_t> mask_to_rows(const std::vector<bool>& mask) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) rows.push_back(i);
  }
  return rows;
}

}  // namespace

RansacState ransac_fit(const Matrix& X, const Vector& y, const RansacConfig& config,
                       std::uint64_t seed) {
  const Index n = X.rows();
  const Index p = X.cols();
  if (y.size() != n) {
    throw ShapeError("ransac_fit: X has " + std::to_string(n) + " rows but y has " +
                     std::to_string(y.size()));
  }
  const Index min_samples = config.min_samples > 0 ? config.min_samples : p + 1;
  if (min_samples < p + 1) {
    throw ParameterError("ransac_fit: min_samples must be at least p + 1 = " +
                         std::to_string(p + 1));
  }
  if (config.max_trials < 1) throw ParameterError("ransac_fit: max_trials must be >= 1");
  if (n < min_samples) {
    throw InsufficientDataError("ransac_fit: need at least " + std::to_string(min_samples) +
                                " rows, got " + std::to_string(n));
  }

  double threshold = config.residual_threshold;
  if (threshold < 0.0) {
    std::vector<double> values(y.data(), y.data() + y.size());
    threshold = median_abs_deviation(std::move(values));
  }

  Rng rng(seed);
  Index best_count = -1;
  double best_residual_sum = std::numeric_limits<double>::infinity();
  std::vector<bool> best_mask;

  for (int trial = 0; trial < config.max_trials; ++trial) {
    const auto sample =
        sample_without_replacement(rng, static_cast<std::size_t>(n),
                                   static_cast<std::size_t>(min_samples));
    const OlsState candidate = ols_fit(gather_rows(X, sample), gather(y, sample));
    const Vector residuals = (y - ols_predict(candidate, X)).cwiseAbs();

    Index count = 0;
    double residual_sum = 0.0;
    std::vector<bool> mask(static_cast<std::size_t>(n), false);
    for (Index i = 0; i < n; ++i) {
      if (residuals(i) <= threshold) {
        mask[static_cast<std::size_t>(i)] = true;
        ++count;
        residual_sum += residuals(i);
      }
    }
    if (count < min_samples) continue;
    if (count > best_count || (count == best_count && residual_sum < best_residual_sum)) {
      best_count = count;
      best_residual_sum = residual_sum;
      best_mask = std::move(mask);
    }
  }

  if (best_count < 0) {
    throw NumericError("ransac_fit: no consensus set of " + std::to_string(min_samples) +
                       " inliers found in " + std::to_string(config.max_trials) + " trials");
  }

  // refit on the inliers and refine the mask until it agrees with the model
  RansacState state;
  state.trials_run = config.max_trials;
  std::vector<bool> mask = std::move(best_mask);
  for (int round = 0; round < 3; ++round) {
    const auto rows = mask_to_rows(mask);
    state.base = ols_fit(gather_rows(X, rows), gather(y, rows));
    const Vector residuals = (y - ols_predict(state.base, X)).cwiseAbs();
    std::vector<bool> refined(static_cast<std::size_t>(n), false);
    Index count = 0;
    for (Index i = 0; i < n; ++i) {
      if (residuals(i) <= threshold) {
        refined[static_cast<std::size_t>(i)] = true;
        ++count;
      }
    }
    if (count < min_samples) {
      throw NumericError("ransac_fit: consensus collapsed below min_samples after refit");
    }
    const bool stable = refined == mask;
    mask = std::move(refined);
    if (stable) break;
  }
  state.inlier_mask = std::move(mask);
  return state;
}

Vector ransac_predict(const RansacState& state, const Matrix& X) {
  return ols_predict(state.base, X);
}

}  // namespace wellkit
