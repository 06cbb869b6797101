#pragma once

#include <cstdint>
#include <vector>

#include "wellkit/linear.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

struct RansacConfig {
  int min_samples = 0;                // 0 -> p + 1
  double residual_threshold = -1.0;   // < 0 -> median absolute deviation of y
  int max_trials = 100;
};

struct RansacState {
  OlsState base;                  // refit on the final inliers
  std::vector<bool> inlier_mask;  // over training rows, consistent with base
  int trials_run = 0;
};

/// Consensus fit: repeatedly draws min_samples rows without replacement,
/// fits least squares, and keeps the hypothesis with the most rows within
/// residual_threshold (ties broken by lower inlier residual sum). The best
/// inlier set is refit and the mask refined until it is consistent with the
/// refit model. Deterministic given the seed.
RansacState ransac_fit(const Matrix& X, const Vector& y, const RansacConfig& config,
                       std::uint64_t seed);
Vector ransac_predict(const RansacState& state, const Matrix& X);

}  // namespace wellkit
