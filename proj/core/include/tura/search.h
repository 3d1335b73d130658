#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tura/features.h"
#include "tura/model.h"

namespace tura {

struct SearchSpace {
  int min_trees = 100;
  int max_trees = 1000;
  int min_mtry = 1;
  int max_mtry = 0;  // 0 = number of features
  int min_leaf_lo = 1;
  int min_leaf_hi = 10;
  double lambda_lo = 1e-4;
  double lambda_hi = 10.0;
};

struct SearchOptions {
  int budget = 10;
  int inner_folds = 3;
  SearchSpace space;
};

struct SearchTrial {
  std::string stage;  // "random" or "grid"
  ModelSpec spec;
  double score = 0.0;  // mean inner-CV accuracy
};

struct SearchResult {
  ModelSpec best;
  double best_score = 0.0;
  std::vector<SearchTrial> trace;
};

// Stage 1 scores `budget` random configurations; stage 2 scores the grid one
// step either side of the stage-1 winner in every dimension (n_trees +-100,
// mtry +-1, min_leaf +-1; lambda x/÷ sqrt(10)). The best trial overall wins,
// earliest on ties.
SearchResult hyperparameter_search(const FeatureMatrix& matrix,
                                   std::span<const std::size_t> rows, ModelKind kind,
                                   const SearchOptions& options, std::uint64_t seed,
                                   int jobs = 1);

}  // namespace tura
