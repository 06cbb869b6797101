#pragma once

#include "wellkit/types.hpp"

namespace wellkit {

struct BrrConfig {
  double prior_a = 1e-6;  // gamma shape for both precisions
  double prior_b = 1e-6;  // gamma rate for both precisions
  int max_iter = 300;
  double tol = 1e-3;         // max absolute change in weights
  double lambda_init = 1.0;  // initial weight precision
};

struct BrrState {
  Vector weights;  // posterior mean
  double intercept = 0.0;
  double alpha = 0.0;   // noise precision
  double lambda = 0.0;  // weight precision
  int iterations_run = 0;
};

/// Bayesian ridge via evidence maximization. Features and target are
/// centered internally; the intercept comes back from the means. Each
/// iteration computes
///   S = (lambda*I + alpha*Xc'Xc)^-1,   m = alpha * S * Xc'yc
/// then updates the precisions with the gamma-prior evidence rules
///   gamma  = p - lambda * trace(S)
///   lambda = (gamma + 2a) / (m'm + 2b)
///   alpha  = (n - gamma + 2a) / (|yc - Xc m|^2 + 2b)
/// until the weights move less than tol or max_iter is reached.
BrrState brr_fit(const Matrix& X, const Vector& y, const BrrConfig& config = {});
Vector brr_predict(const BrrState& state, const Matrix& X);

}  // namespace wellkit
