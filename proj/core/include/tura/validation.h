#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tura/features.h"
#include "tura/model.h"

namespace tura {

// Fold id per row. Each class is shuffled with `seed` and dealt round-robin,
// continuing across classes, so per-fold class counts differ by at most one.
// Throws Error when some class has fewer than k rows.
std::vector<int> stratified_kfold(std::span<const int> labels, int k, std::uint64_t seed);

struct ClassificationMetrics {
  double accuracy = 0.0;
  double macro_precision = 0.0;
  double macro_recall = 0.0;
  double macro_f1 = 0.0;
  std::vector<double> precision;  // per class; 0 when the class is never predicted
  std::vector<double> recall;     // per class; 0 when the class has no rows
  std::vector<double> f1;
  std::vector<std::vector<int>> confusion;  // [truth][predicted]
};

ClassificationMetrics compute_metrics(std::span<const int> truth,
                                      std::span<const int> predicted, int classes = 3);

struct SearchOptions;
struct SearchResult;

struct FoldReport {
  int fold = 0;
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  ClassificationMetrics metrics;
  std::optional<ModelSpec> searched_spec;
};

struct EvaluationReport {
  ModelSpec spec;
  int k = 0;
  std::uint64_t seed = 0;
  std::vector<FoldReport> folds;
  // Macro metrics averaged over folds; confusion pooled over folds.
  ClassificationMetrics aggregate;
  double pooled_accuracy = 0.0;
  std::vector<int> fold_of_row;
  std::vector<int> predictions;
  std::vector<std::string> warnings;
};

// Retrains per fold on the training split only (imputation, standardization
// and, when `search` is given, hyperparameter search included).
EvaluationReport evaluate(const FeatureMatrix& matrix, const ModelSpec& spec,
                          std::span<const int> fold_of_row, std::uint64_t seed,
                          int jobs = 1, const SearchOptions* search = nullptr);

EvaluationReport cross_validate(const FeatureMatrix& matrix, const ModelSpec& spec, int k,
                                std::uint64_t seed, int jobs = 1,
                                const SearchOptions* search = nullptr);

std::vector<int> labels_of(const FeatureMatrix& matrix);

}  // namespace tura
