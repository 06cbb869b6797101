#include "wellkit/forest.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "wellkit/errors.hpp"

namespace wellkit {

namespace {

struct SplitChoice {
  int feature = -1;
  double threshold = 0.0;
  double sse = std::numeric_limits<double>::infinity();
};

double subset_mean(const Vector& y, const std::vector<Index>& rows) {
  double sum = 0.0;
  for (Index r : rows) sum += y(r);
  return sum / static_cast<double>(rows.size());
}

bool is_pure(const Vector& y, const std::vector<Index>& rows) {
  const double first = y(rows.front());
  for (Index r : rows) {
    if (y(r) != first) return false;
  }
  return true;
}

/// Best split over the candidate features by total child squared error.
SplitChoice best_split(const Matrix& X, const Vector& y, const std::vector<Index>& rows,
                       const std::vector<int>& features, int min_samples_leaf) {
  SplitChoice best;
  const std::size_t n = rows.size();
  std::vector<Index> order(rows);

  for (int feature : features) {
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return X(a, feature) < X(b, feature); });

    // prefix sums over the sorted order
    double sum_left = 0.0, sq_left = 0.0;
    double sum_total = 0.0, sq_total = 0.0;
    for (Index r : order) {
      sum_total += y(r);
      sq_total += y(r) * y(r);
    }

    for (std::size_t k = 1; k < n; ++k) {
      const double yv = y(order[k - 1]);
      sum_left += yv;
      sq_left += yv * yv;

      const double x_lo = X(order[k - 1], feature);
      const double x_hi = X(order[k], feature);
      if (!(x_lo < x_hi)) continue;  // split only between distinct values
      const double threshold = x_lo + 0.5 * (x_hi - x_lo);
      if (!(threshold < x_hi)) continue;  // midpoint rounded onto the upper value

      const auto n_left = static_cast<double>(k);
      const auto n_right = static_cast<double>(n - k);
      if (k < static_cast<std::size_t>(min_samples_leaf) ||
          n - k < static_cast<std::size_t>(min_samples_leaf)) {
        continue;
      }
      const double sum_right = sum_total - sum_left;
      const double sq_right = sq_total - sq_left;
      const double sse =
          (sq_left - sum_left * sum_left / n_left) + (sq_right - sum_right * sum_right / n_right);
      if (sse < best.sse) {
        best = SplitChoice{feature, threshold, sse};
      }
      // equal sse keeps the earlier candidate: features ascend and thresholds
      // ascend within a feature, which realizes the documented tie-break
    }
  }
  return best;
}

}  // namespace

double RegressionTree::predict_one(const Eigen::Ref<const Eigen::RowVectorXd>& row) const {
  int node = 0;
  while (!nodes[static_cast<std::size_t>(node)].is_leaf()) {
    const TreeNode& t = nodes[static_cast<std::size_t>(node)];
    node = row(t.feature) <= t.threshold ? t.left : t.right;
  }
  return nodes[static_cast<std::size_t>(node)].value;
}

Vector RegressionTree::predict(const Matrix& X) const {
  Vector out(X.rows());
  for (Index i = 0; i < X.rows(); ++i) out(i) = predict_one(X.row(i));
  return out;
}

RegressionTree grow_tree(const Matrix& X, const Vector& y, std::vector<Index> rows,
                         const ForestConfig& config, Rng& rng) {
  RegressionTree tree;
  const int p = static_cast<int>(X.cols());
  const int max_features =
      config.max_features > 0 ? std::min(config.max_features, p) : p;

  std::vector<int> all_features(static_cast<std::size_t>(p));
  std::iota(all_features.begin(), all_features.end(), 0);

  // explicit stack; each entry owns its row subset
  struct Pending {
    std::vector<Index> rows;
    int depth;
    int node;
  };

  tree.nodes.push_back(TreeNode{});
  std::vector<Pending> stack;
  stack.push_back(Pending{std::move(rows), 0, 0});

  while (!stack.empty()) {
    Pending item = std::move(stack.back());
    stack.pop_back();
    TreeNode& node = tree.nodes[static_cast<std::size_t>(item.node)];
    node.value = subset_mean(y, item.rows);

    const bool depth_exhausted = config.max_depth >= 0 && item.depth >= config.max_depth;
    if (item.rows.size() < 2 * static_cast<std::size_t>(config.min_samples_leaf) ||
        depth_exhausted || is_pure(y, item.rows)) {
      continue;  // leaf
    }

    std::vector<int> features = all_features;
    if (max_features < p) {
      for (int i = 0; i < max_features; ++i) {
        std::swap(features[static_cast<std::size_t>(i)],
                  features[static_cast<std::size_t>(i) +
                           rng.below(static_cast<std::uint64_t>(p - i))]);
      }
      features.resize(static_cast<std::size_t>(max_features));
      std::sort(features.begin(), features.end());
    }

    const SplitChoice split = best_split(X, y, item.rows, features, config.min_samples_leaf);
    if (split.feature < 0) continue;  // no valid candidate, e.g. all values equal

    std::vector<Index> left_rows, right_rows;
    left_rows.reserve(item.rows.size());
    right_rows.reserve(item.rows.size());
    for (Index r : item.rows) {
      (X(r, split.feature) <= split.threshold ? left_rows : right_rows).push_back(r);
    }

    const int left_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{});
    const int right_id = static_cast<int>(tree.nodes.size());
    tree.nodes.push_back(TreeNode{});

    TreeNode& parent = tree.nodes[static_cast<std::size_t>(item.node)];
    parent.feature = split.feature;
    parent.threshold = split.threshold;
    parent.left = left_id;
    parent.right = right_id;

    // push right first so the left subtree is grown first (defined rng order)
    stack.push_back(Pending{std::move(right_rows), item.depth + 1, right_id});
    stack.push_back(Pending{std::move(left_rows), item.depth + 1, left_id});
  }
  return tree;
}

ForestState rf_fit(const Matrix& X, const Vector& y, const ForestConfig& config,
                   std::uint64_t seed) {
  const Index n = X.rows();
  if (y.size() != n) {
    throw ShapeError("rf_fit: X has " + std::to_string(n) + " rows but y has " +
                     std::to_string(y.size()));
  }
  if (n < 2) throw InsufficientDataError("rf_fit: need at least 2 rows");
  if (config.n_trees < 1) throw ParameterError("rf_fit: n_trees must be >= 1");
  if (config.min_samples_leaf < 1) throw ParameterError("rf_fit: min_samples_leaf must be >= 1");

  ForestState state;
  state.n_features = X.cols();
  state.trees.reserve(static_cast<std::size_t>(config.n_trees));
  state.bootstrap_seeds.reserve(static_cast<std::size_t>(config.n_trees));

  for (int t = 0; t < config.n_trees; ++t) {
    const std::uint64_t tree_seed = derive_seed(seed, {static_cast<std::uint64_t>(t)});
    state.bootstrap_seeds.push_back(tree_seed);
    Rng rng(tree_seed);

    std::vector<Index> rows(static_cast<std::size_t>(n));
    if (config.bootstrap) {
      for (Index i = 0; i < n; ++i) {
        rows[static_cast<std::size_t>(i)] =
            static_cast<Index>(rng.below(static_cast<std::uint64_t>(n)));
      }
    } else {
      std::iota(rows.begin(), rows.end(), Index{0});
    }
    state.trees.push_back(grow_tree(X, y, std::move(rows), config, rng));
  }
  return state;
}

Vector rf_predict(const ForestState& state, const Matrix& X) {
  if (X.cols() != state.n_features) {
    throw ShapeError("rf_predict: expected " + std::to_string(state.n_features) +
                     " feature columns, got " + std::to_string(X.cols()));
  }
  Vector out = Vector::Zero(X.rows());
  for (const RegressionTree& tree : state.trees) {
    out += tree.predict(X);
  }
  return out / static_cast<double>(state.trees.size());
}

}  // namespace wellkit
