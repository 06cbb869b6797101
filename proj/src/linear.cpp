#include "wellkit/linear.hpp"

#include <string>

#include "wellkit/errors.hpp"

namespace wellkit {

OlsState ols_fit(const Matrix& X, const Vector& y) {
  const Index n = X.rows();
  const Index p = X.cols();
  if (y.size() != n) {
    throw ShapeError("ols_fit: X has " + std::to_string(n) + " rows but y has " +
                     std::to_string(y.size()));
  }
  if (p < 1) throw ShapeError("ols_fit: no feature columns");
  if (n < p + 1) {
    throw InsufficientDataError("ols_fit: need at least " + std::to_string(p + 1) +
                                " rows for " + std::to_string(p) + " features, got " +
                                std::to_string(n));
  }

  Matrix design(n, p + 1);
  design.col(0).setOnes();
  design.rightCols(p) = X;

  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(design);
  const Vector beta = cod.solve(y);

  OlsState state;
  state.intercept = beta(0);
  state.weights = beta.tail(p);
  state.rank = cod.rank();
  state.rank_deficient = cod.rank() < p + 1;
  return state;
}

Vector ols_predict(const OlsState& state, const Matrix& X) {
  if (X.cols() != state.weights.size()) {
    throw ShapeError("ols_predict: expected " + std::to_string(state.weights.size()) +
                     " feature columns, got " + std::to_string(X.cols()));
  }
  return (X * state.weights).array() + state.intercept;
}

}  // namespace wellkit
