#pragma once

#include <cstdint>
#include <vector>

#include "wellkit/rng.hpp"
#include "wellkit/types.hpp"

namespace wellkit {

struct ForestConfig {
  int n_trees = 100;
  int max_depth = -1;        // -1 -> unlimited
  int min_samples_leaf = 1;
  int max_features = -1;     // -1 -> all features at every split
  bool bootstrap = true;
};

/// Axis-aligned regression tree node. Leaves have feature < 0 and carry the
/// mean target of their training rows; internal nodes send rows with
/// x[feature] <= threshold to the left child.
struct TreeNode {
  int feature = -1;
  double threshold = 0.0;
  int left = -1;
  int right = -1;
  double value = 0.0;

  bool is_leaf() const { return feature < 0; }
};

struct RegressionTree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  double predict_one(const Eigen::Ref<const Eigen::RowVectorXd>& row) const;
  Vector predict(const Matrix& X) const;
};

struct ForestState {
  std::vector<RegressionTree> trees;
  std::vector<std::uint64_t> bootstrap_seeds;  // one per tree
  Index n_features = 0;
};

/// Grows one tree on the given rows (duplicates allowed, as produced by a
/// bootstrap draw). Splits are chosen over every (feature, midpoint between
/// consecutive distinct sorted values) candidate by minimum total child
/// squared error; ties prefer the lowest feature index, then the lowest
/// threshold. rng is consumed only when max_features < p.
RegressionTree grow_tree(const Matrix& X, const Vector& y, std::vector<Index> rows,
                         const ForestConfig& config, Rng& rng);

ForestState rf_fit(const Matrix& X, const Vector& y, const ForestConfig& config,
                   std::uint64_t seed);
Vector rf_predict(const ForestState& state, const Matrix& X);

}  // namespace wellkit
