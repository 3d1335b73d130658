#include "tura/forest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "tura/errors.h"
#include "tura/parallel.h"

namespace tura {

namespace {

__extension__ typedef __int128 Wide;

// A split's quality is A/nl + B/nr (A, B = sums of squared class counts on
// each side), held as an exact fraction. Larger means lower weighted child
// Gini.
struct Candidate {
  int feature = -1;
  double threshold = 0.0;
  Wide num = 0;
  Wide den = 1;
  std::int64_t sq_left = 0;
  std::int64_t sq_right = 0;
  std::int64_t n_left = 0;
  std::int64_t n_right = 0;
};

// Strictly better: higher score, then lower feature, then lower threshold.
bool better(const Candidate& a, const Candidate& b) {
  if (b.feature < 0) return a.feature >= 0;
  const Wide lhs = a.num * b.den;
  const Wide rhs = b.num * a.den;
  if (lhs != rhs) return lhs > rhs;
  if (a.feature != b.feature) return a.feature < b.feature;
  return a.threshold < b.threshold;
}

std::int64_t sum_squares(const std::vector<int>& counts) {
  std::int64_t s = 0;
  for (int c : counts) s += static_cast<std::int64_t>(c) * c;
  return s;
}

double midpoint(double a, double b) {
  const double m = a + (b - a) / 2;
  return m < b ? m : a;
}

class TreeBuilder {
 public:
  TreeBuilder(const Dataset& data, int mtry, int min_leaf, int max_depth, Rng& rng)
      : data_(data), mtry_(mtry), min_leaf_(min_leaf), max_depth_(max_depth), rng_(rng) {
    features_.resize(data.cols);
    for (std::size_t j = 0; j < data.cols; ++j) features_[j] = static_cast<int>(j);
  }

  DecisionTree build(std::span<const std::size_t> sample) {
    root_rows_ = static_cast<double>(sample.size());
    std::vector<std::size_t> rows(sample.begin(), sample.end());
    grow(std::move(rows), 0);
    return std::move(tree_);
  }

 private:
  int grow(std::vector<std::size_t> rows, int depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    std::vector<int> counts(data_.classes, 0);
    for (auto r : rows) ++counts[data_.y[r]];
    tree_.nodes[id].class_counts = counts;

    const auto n = static_cast<std::int64_t>(rows.size());
    const int nonzero = static_cast<int>(std::count_if(
        counts.begin(), counts.end(), [](int c) { return c > 0; }));
    if (nonzero <= 1 || n < 2 * static_cast<std::int64_t>(min_leaf_) ||
        (max_depth_ > 0 && depth >= max_depth_)) {
      return id;
    }

    const Candidate best = best_split(rows, counts);
    const std::int64_t parent_sq = sum_squares(counts);
    // Require a strictly positive impurity decrease: num/den > parent_sq/n.
    if (best.feature < 0 || best.num * n <= static_cast<Wide>(parent_sq) * best.den) {
      return id;
    }

    std::vector<std::size_t> left, right;
    left.reserve(best.n_left);
    right.reserve(best.n_right);
    for (auto r : rows) {
      (data_.at(r, best.feature) <= best.threshold ? left : right).push_back(r);
    }
    rows.clear();
    rows.shrink_to_fit();

    const double decrease =
        static_cast<double>(best.sq_left) / best.n_left +
        static_cast<double>(best.sq_right) / best.n_right -
        static_cast<double>(parent_sq) / n;
    {
      TreeNode& node = tree_.nodes[id];
      node.feature = best.feature;
      node.threshold = best.threshold;
      node.weighted_decrease = decrease / root_rows_;
    }
    const int l = grow(std::move(left), depth + 1);
    const int r = grow(std::move(right), depth + 1);
    tree_.nodes[id].left = l;
    tree_.nodes[id].right = r;
    return id;
  }

  Candidate best_split(const std::vector<std::size_t>& rows, const std::vector<int>& counts) {
    const int p = static_cast<int>(data_.cols);
    std::span<int> order(features_);
    if (mtry_ < p) {
      std::iota(features_.begin(), features_.end(), 0);
      rng_.shuffle(order);
    }
    Candidate best;
    int informative = 0;
    for (int j : order) {
      if (informative >= mtry_) break;
      bool constant = true;
      const Candidate c = best_for_feature(rows, counts, j, &constant);
      if (constant) continue;
      ++informative;
      if (better(c, best)) best = c;
    }
    return best;
  }

  Candidate best_for_feature(const std::vector<std::size_t>& rows,
                             const std::vector<int>& counts, int feature, bool* constant) {
    scratch_.clear();
    for (auto r : rows) scratch_.emplace_back(data_.at(r, feature), data_.y[r]);
    std::sort(scratch_.begin(), scratch_.end());
    *constant = scratch_.front().first == scratch_.back().first;
    Candidate best;
    if (*constant) return best;

    const auto n = static_cast<std::int64_t>(scratch_.size());
    std::vector<int> left(counts.size(), 0);
    std::vector<int> right = counts;
    for (std::int64_t i = 0; i + 1 < n; ++i) {
      const int label = scratch_[i].second;
      ++left[label];
      --right[label];
      if (scratch_[i].first == scratch_[i + 1].first) continue;
      const std::int64_t nl = i + 1;
      const std::int64_t nr = n - nl;
      if (nl < min_leaf_ || nr < min_leaf_) continue;
      Candidate c;
      c.feature = feature;
      c.threshold = midpoint(scratch_[i].first, scratch_[i + 1].first);
      c.sq_left = sum_squares(left);
      c.sq_right = sum_squares(right);
      c.n_left = nl;
      c.n_right = nr;
      c.num = static_cast<Wide>(c.sq_left) * nr + static_cast<Wide>(c.sq_right) * nl;
      c.den = static_cast<Wide>(nl) * nr;
      if (better(c, best)) best = c;
    }
    return best;
  }

  const Dataset& data_;
  int mtry_;
  int min_leaf_;
  int max_depth_;
  Rng& rng_;
  double root_rows_ = 1.0;
  std::vector<int> features_;
  std::vector<std::pair<double, int>> scratch_;
  DecisionTree tree_;
};

int argmax_lowest(std::span<const int> counts) {
  int best = 0;
  for (int c = 1; c < static_cast<int>(counts.size()); ++c) {
    if (counts[c] > counts[best]) best = c;
  }
  return best;
}

}  // namespace

double gini(std::span<const int> class_counts) {
  double n = 0.0;
  for (int c : class_counts) n += c;
  if (n == 0.0) return 0.0;
  double sq = 0.0;
  for (int c : class_counts) sq += (c / n) * (c / n);
  return 1.0 - sq;
}

const TreeNode& DecisionTree::leaf_for(std::span<const double> row) const {
  const TreeNode* node = &nodes.front();
  while (!node->is_leaf()) {
    node = &nodes[row[node->feature] <= node->threshold ? node->left : node->right];
  }
  return *node;
}

int DecisionTree::predict(std::span<const double> row) const {
  return argmax_lowest(leaf_for(row).class_counts);
}

DecisionTree grow_tree(const Dataset& data, std::span<const std::size_t> sample, int mtry,
                       int min_leaf, int max_depth, Rng& rng) {
  if (sample.empty()) throw TrainingError("cannot grow a tree on an empty sample");
  const int p = static_cast<int>(data.cols);
  return TreeBuilder(data, std::clamp(mtry, 1, std::max(p, 1)), std::max(min_leaf, 1),
                     max_depth, rng)
      .build(sample);
}

int RandomForestModel::predict(std::span<const double> row) const {
  std::vector<int> votes(classes, 0);
  for (const auto& tree : trees) ++votes[tree.predict(row)];
  return argmax_lowest(votes);
}

std::vector<double> RandomForestModel::predict_proba(std::span<const double> row) const {
  std::vector<double> p(classes, 0.0);
  if (trees.empty()) return p;
  for (const auto& tree : trees) p[tree.predict(row)] += 1.0;
  for (auto& v : p) v /= static_cast<double>(trees.size());
  return p;
}

int resolve_mtry(int mtry, std::size_t features) {
  const int p = static_cast<int>(features);
  if (mtry <= 0) {
    return std::max(1, static_cast<int>(std::floor(std::sqrt(static_cast<double>(p)))));
  }
  return std::min(mtry, std::max(p, 1));
}

RandomForestModel train_random_forest(const Dataset& data, const ForestParams& params,
                                      std::uint64_t seed, int jobs) {
  if (data.rows == 0 || data.cols == 0) throw TrainingError("empty training matrix");
  if (params.n_trees < 1) throw TrainingError("n_trees must be >= 1");
  std::vector<int> present(data.classes, 0);
  for (int label : data.y) {
    if (label < 0 || label >= data.classes) throw TrainingError("label out of range");
    present[label] = 1;
  }
  if (std::count(present.begin(), present.end(), 1) < 2) {
    throw TrainingError("training data needs at least two classes");
  }

  RandomForestModel model;
  model.params = params;
  model.params.mtry = resolve_mtry(params.mtry, data.cols);
  model.params.min_leaf = std::max(params.min_leaf, 1);
  model.seed = seed;
  model.classes = data.classes;
  model.features = data.cols;
  model.trees.resize(params.n_trees);

  parallel_for(model.trees.size(), jobs, [&](std::size_t t) {
    Rng rng(seed + t);
    std::vector<std::size_t> sample(data.rows);
    for (auto& s : sample) s = rng.uniform_index(data.rows);
    model.trees[t] = grow_tree(data, sample, model.params.mtry, model.params.min_leaf,
                               model.params.max_depth, rng);
  });
  return model;
}

std::vector<double> mdi_importance(const RandomForestModel& model) {
  std::vector<double> importance(model.features, 0.0);
  for (const auto& tree : model.trees) {
    for (const auto& node : tree.nodes) {
      if (!node.is_leaf()) importance[node.feature] += node.weighted_decrease;
    }
  }
  double total = 0.0;
  for (double v : importance) total += v;
  if (total <= 0.0) {
    std::fill(importance.begin(), importance.end(), 0.0);
    return importance;
  }
  for (auto& v : importance) v /= total;
  return importance;
}

}  // namespace tura
