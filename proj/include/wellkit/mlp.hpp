#pragma once

#include <cstdint>
#include <vector>

#include "wellkit/types.hpp"

namespace wellkit {

struct MlpConfig {
  int hidden = 100;
  int epochs = 200;
  int batch = 0;        // 0 -> min(200, n)
  double step = 1e-3;   // Adam step size
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Weights of a [p, hidden, 1] network with rectified-linear hidden units
/// and identity output.
struct MlpParams {
  Matrix w1;   // hidden x p
  Vector b1;   // hidden
  Vector w2;   // hidden
  double b2 = 0.0;
};

struct MlpGradients {
  Matrix w1;
  Vector b1;
  Vector w2;
  double b2 = 0.0;
};

struct MlpState {
  MlpParams params;
  std::vector<double> loss_trace;  // full-data MSE after each epoch
};

MlpParams mlp_zero_params(Index n_features, int hidden);

Vector mlp_forward(const MlpParams& params, const Matrix& X);

/// Mean squared error of the network over the given rows.
double mlp_loss(const MlpParams& params, const Matrix& X, const Vector& y);

/// Analytic gradients of mlp_loss via backpropagation.
MlpGradients mlp_gradients(const MlpParams& params, const Matrix& X, const Vector& y);

/// Trains with seeded Glorot-uniform init, per-epoch shuffled mini-batches,
/// and adaptive-moment updates. Deterministic given the seed.
MlpState mlp_fit(const Matrix& X, const Vector& y, const MlpConfig& config, std::uint64_t seed);
Vector mlp_predict(const MlpState& state, const Matrix& X);

}  // namespace wellkit
