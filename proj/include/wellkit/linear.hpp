#pragma once

#include "wellkit/types.hpp"

namespace wellkit {

/// Least-squares fit with intercept. Solved through a rank-revealing
/// complete orthogonal decomposition, so rank-deficient problems get the
/// minimum-norm solution (flagged via rank_deficient).
struct OlsState {
  Vector weights;
  double intercept = 0.0;
  Index rank = 0;
  bool rank_deficient = false;
};

OlsState ols_fit(const Matrix& X, const Vector& y);
Vector ols_predict(const OlsState& state, const Matrix& X);

}  // namespace wellkit
