#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wellkit/errors.hpp"
#include "wellkit/mlp.hpp"
#include "wellkit/rng.hpp"

using namespace wellkit;

namespace {

double max_relative_error(const MlpGradients& analytic, const MlpGradients& numeric) {
  double worst = 0.0;
  const auto relate = [&](double a, double n) {
    const double scale = std::max({std::abs(a), std::abs(n), 1e-8});
    worst = std::max(worst, std::abs(a - n) / scale);
  };
  for (Index i = 0; i < analytic.w1.rows(); ++i) {
    for (Index j = 0; j < analytic.w1.cols(); ++j) relate(analytic.w1(i, j), numeric.w1(i, j));
  }
  for (Index i = 0; i < analytic.b1.size(); ++i) relate(analytic.b1(i), numeric.b1(i));
  for (Index i = 0; i < analytic.w2.size(); ++i) relate(analytic.w2(i), numeric.w2(i));
  relate(analytic.b2, numeric.b2);
  return worst;
}

MlpParams random_params(Rng& rng, Index p, int hidden) {
  MlpParams params = mlp_zero_params(p, hidden);
  for (Index i = 0; i < params.w1.rows(); ++i) {
    for (Index j = 0; j < params.w1.cols(); ++j) params.w1(i, j) = rng.uniform(-0.8, 0.8);
  }
  for (Index i = 0; i < params.b1.size(); ++i) params.b1(i) = rng.uniform(-0.5, 0.5);
  for (Index i = 0; i < params.w2.size(); ++i) params.w2(i) = rng.uniform(-0.8, 0.8);
  params.b2 = rng.uniform(-0.5, 0.5);
  return params;
}

}  // namespace

TEST_CASE("the zero network predicts zero everywhere") {
  const MlpParams zero = mlp_zero_params(3, 8);
  Matrix x(4, 3);
  x.setRandom();
  const Vector out = mlp_forward(zero, x);
  for (Index i = 0; i < out.size(); ++i) CHECK(out(i) == 0.0);
}

TEST_CASE("backprop gradients match central differences") {
  // 3x2 data, 4 hidden units, checked at 10 random parameter points
  Rng rng(424242);
  Matrix x(3, 2);
  x << 0.31, -0.42, 0.77, 0.12, -0.55, 0.64;
  Vector y(3);
  y << 0.4, -0.2, 0.7;

  for (int point = 0; point < 10; ++point) {
    const MlpParams params = random_params(rng, 2, 4);
    const MlpGradients analytic = mlp_gradients(params, x, y);
    const MlpGradients numeric = oracles::numeric_mlp_gradients(params, x, y, 1e-5);
    CHECK(max_relative_error(analytic, numeric) < 1e-4);
  }
}

TEST_CASE("a noise-free affine target trains below 1e-4 mse") {
  Rng rng(99);
  Matrix x(200, 1);
  Vector y(200);
  for (Index i = 0; i < 200; ++i) {
    x(i, 0) = rng.uniform01();
    y(i) = 0.3 * x(i, 0) + 0.2;
  }
  const MlpState state = mlp_fit(x, y, MlpConfig{}, 7);  // defaults: 200 epochs
  REQUIRE(state.loss_trace.size() == 200);
  CHECK(state.loss_trace.back() < 1e-4);
  CHECK(mlp_loss(state.params, x, y) == doctest::Approx(state.loss_trace.back()));
  for (double loss : state.loss_trace) CHECK(std::isfinite(loss));
}

TEST_CASE("training is deterministic given the seed") {
  Rng rng(15);
  Matrix x(50, 2);
  Vector y(50);
  for (Index i = 0; i < 50; ++i) {
    x(i, 0) = rng.uniform01();
    x(i, 1) = rng.uniform01();
    y(i) = 0.5 * x(i, 0) - 0.1 * x(i, 1);
  }
  MlpConfig config;
  config.hidden = 16;
  config.epochs = 20;
  const MlpState a = mlp_fit(x, y, config, 123);
  const MlpState b = mlp_fit(x, y, config, 123);
  CHECK(a.params.w1 == b.params.w1);
  CHECK(a.params.w2 == b.params.w2);
  CHECK(a.loss_trace == b.loss_trace);

  const MlpState c = mlp_fit(x, y, config, 124);
  CHECK(a.params.w1 != c.params.w1);
}

TEST_CASE("an exploding step is reported with its epoch") {
  Matrix x(8, 1);
  Vector y(8);
  for (Index i = 0; i < 8; ++i) {
    x(i, 0) = static_cast<double>(i) * 100.0;
    y(i) = static_cast<double>(i) * 1e6;
  }
  MlpConfig config;
  config.step = 1e300;  // drives the forward pass to overflow
  config.epochs = 50;
  CHECK_THROWS_WITH_AS(mlp_fit(x, y, config, 1), doctest::Contains("epoch"), NumericError);
}

TEST_CASE("input validation") {
  Matrix x(1, 1);
  x << 0.5;
  Vector y(1);
  y << 0.5;
  CHECK_THROWS_AS(mlp_fit(x, y, MlpConfig{}, 0), InsufficientDataError);

  Matrix x2(4, 1);
  x2.setRandom();
  Vector y2(4);
  y2 << 1.0, 2.0, std::numeric_limits<double>::infinity(), 4.0;
  CHECK_THROWS_AS(mlp_fit(x2, y2, MlpConfig{}, 0), ParameterError);

  const MlpParams zero = mlp_zero_params(2, 4);
  Matrix wrong(3, 5);
  wrong.setZero();
  CHECK_THROWS_AS(mlp_forward(zero, wrong), ShapeError);
}
