#include "tura/search.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tura/errors.h"
#include "tura/random.h"
#include "tura/validation.h"

namespace tura {
namespace {

constexpr int kTreeStep = 100;
const double kLambdaStep = std::sqrt(10.0);

FeatureMatrix subset(const FeatureMatrix& matrix, std::span<const std::size_t> rows) {
  FeatureMatrix out;
  out.schema = matrix.schema;
  out.rows.reserve(rows.size());
  for (auto r : rows) out.rows.push_back(matrix.rows[r]);
  return out;
}

int inner_k(const FeatureMatrix& m, int requested) {
  std::vector<int> counts(kNumLevels, 0);
  for (const auto& row : m.rows) ++counts[ordinal(row.level)];
  int smallest = std::numeric_limits<int>::max();
  for (int c : counts) {
    if (c > 0) smallest = std::min(smallest, c);
  }
  const int k = std::min(requested, smallest);
  if (k < 2) throw TrainingError("too few rows per class for inner cross-validation");
  return k;
}

ModelSpec clamp_spec(ModelSpec spec, const SearchSpace& space, int p) {
  const int max_mtry = space.max_mtry > 0 ? std::min(space.max_mtry, p) : p;
  spec.forest.n_trees = std::clamp(spec.forest.n_trees, space.min_trees, space.max_trees);
  spec.forest.mtry = std::clamp(spec.forest.mtry, std::min(space.min_mtry, max_mtry), max_mtry);
  spec.forest.min_leaf = std::clamp(spec.forest.min_leaf, space.min_leaf_lo, space.min_leaf_hi);
  spec.logreg.l2_lambda = std::clamp(spec.logreg.l2_lambda, space.lambda_lo, space.lambda_hi);
  return spec;
}

ModelSpec random_spec(ModelKind kind, const SearchSpace& space, int p, Rng& rng) {
  ModelSpec spec;
  spec.kind = kind;
  if (kind == ModelKind::kRandomForest) {
    const int steps = (space.max_trees - space.min_trees) / kTreeStep + 1;
    spec.forest.n_trees =
        space.min_trees + kTreeStep * static_cast<int>(rng.uniform_index(steps));
    const int max_mtry = space.max_mtry > 0 ? std::min(space.max_mtry, p) : p;
    const int lo = std::min(space.min_mtry, max_mtry);
    spec.forest.mtry = lo + static_cast<int>(rng.uniform_index(max_mtry - lo + 1));
    spec.forest.min_leaf =
        space.min_leaf_lo +
        static_cast<int>(rng.uniform_index(space.min_leaf_hi - space.min_leaf_lo + 1));
  } else {
    const double a = std::log10(space.lambda_lo);
    const double b = std::log10(space.lambda_hi);
    spec.logreg.l2_lambda = std::pow(10.0, a + (b - a) * rng.uniform_real());
  }
  return clamp_spec(spec, space, p);
}

std::vector<ModelSpec> neighbours(const ModelSpec& center, const SearchSpace& space, int p) {
  std::vector<ModelSpec> out;
  if (center.kind == ModelKind::kRandomForest) {
    for (int dt : {-1, 0, 1}) {
      for (int dm : {-1, 0, 1}) {
        for (int dl : {-1, 0, 1}) {
          ModelSpec s = center;
          s.forest.n_trees += dt * kTreeStep;
          s.forest.mtry += dm;
          s.forest.min_leaf += dl;
          out.push_back(clamp_spec(s, space, p));
        }
      }
    }
  } else {
    for (double f : {1.0 / kLambdaStep, 1.0, kLambdaStep}) {
      ModelSpec s = center;
      s.logreg.l2_lambda *= f;
      out.push_back(clamp_spec(s, space, p));
    }
  }
  return out;
}

}  // namespace

SearchResult hyperparameter_search(const FeatureMatrix& matrix,
                                   std::span<const std::size_t> rows, ModelKind kind,
                                   const SearchOptions& options, std::uint64_t seed,
                                   int jobs) {
  if (options.budget < 1) throw ConfigError("search budget must be positive");
  const FeatureMatrix train = subset(matrix, rows);
  const int k = inner_k(train, options.inner_folds);
  const auto folds = stratified_kfold(labels_of(train), k, seed);
  const int p = static_cast<int>(matrix.schema.size());

  SearchResult result;
  bool have_best = false;
  auto score = [&](const std::string& stage, const ModelSpec& spec) {
    for (const auto& t : result.trace) {
      if (t.spec == spec) return;
    }
    const auto report = evaluate(train, spec, folds, seed, jobs, nullptr);
    SearchTrial trial{stage, spec, report.aggregate.accuracy};
    if (!have_best || trial.score > result.best_score) {
      result.best = spec;
      result.best_score = trial.score;
      have_best = true;
    }
    result.trace.push_back(std::move(trial));
  };

  Rng rng(splitmix64(seed ^ 0x5EA4C4ULL));
  for (int i = 0; i < options.budget; ++i) {
    score("random", random_spec(kind, options.space, p, rng));
  }
  const ModelSpec center = result.best;
  for (const auto& spec : neighbours(center, options.space, p)) score("grid", spec);
  return result;
}

}  // namespace tura
