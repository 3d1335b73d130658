#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tura/dataset.h"
#include "tura/random.h"

namespace tura {

struct ForestParams {
  int n_trees = 500;
  int mtry = 0;       // 0 = floor(sqrt(p)), at least 1
  int min_leaf = 1;
  int max_depth = 0;  // 0 = unlimited

  bool operator==(const ForestParams&) const = default;
};

struct TreeNode {
  int feature = -1;  // -1 for leaves
  double threshold = 0.0;  // rows with x <= threshold go left
  int left = -1;
  int right = -1;
  std::vector<int> class_counts;  // training (bootstrap) rows reaching the node
  // (node rows / root rows) * Gini decrease of the split; 0 for leaves.
  double weighted_decrease = 0.0;

  bool is_leaf() const { return feature < 0; }
  bool operator==(const TreeNode&) const = default;
};

class DecisionTree {
 public:
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  const TreeNode& leaf_for(std::span<const double> row) const;
  // Majority class of the leaf, lowest class on ties.
  int predict(std::span<const double> row) const;
  bool operator==(const DecisionTree&) const = default;
};

double gini(std::span<const int> class_counts);

// Grows one CART tree on `sample` (row indices, repeats allowed). At each
// node `mtry` features are drawn in random order; when mtry >= p every
// feature is considered and no randomness is used. Thresholds are midpoints
// between consecutive distinct values. The split maximizing the Gini
// decrease wins; ties go to the lowest feature index, then the lowest
// threshold. Nodes without a strictly positive decrease become leaves.
DecisionTree grow_tree(const Dataset& data, std::span<const std::size_t> sample,
                       int mtry, int min_leaf, int max_depth, Rng& rng);

struct RandomForestModel {
  std::vector<DecisionTree> trees;
  ForestParams params;  // mtry resolved
  std::uint64_t seed = 0;
  int classes = 3;
  std::size_t features = 0;

  // Majority vote over trees, lowest class on ties.
  int predict(std::span<const double> row) const;
  // Fraction of tree votes per class.
  std::vector<double> predict_proba(std::span<const double> row) const;
  bool operator==(const RandomForestModel&) const = default;
};

int resolve_mtry(int mtry, std::size_t features);

// Tree t is grown on a bootstrap drawn from Rng(seed + t). Throws
// TrainingError when fewer than two classes are present.
RandomForestModel train_random_forest(const Dataset& data, const ForestParams& params,
                                      std::uint64_t seed, int jobs = 1);

// Mean decrease in impurity per feature, averaged over trees and normalized
// to sum to 1 (all zeros when no tree has a split).
std::vector<double> mdi_importance(const RandomForestModel& model);

}  // namespace tura
