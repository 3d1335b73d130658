#include "tura/validation.h"

#include <algorithm>
#include <map>

#include "tura/errors.h"
#include "tura/random.h"
#include "tura/search.h"

namespace tura {

std::vector<int> labels_of(const FeatureMatrix& matrix) {
  std::vector<int> labels;
  labels.reserve(matrix.rows.size());
  for (const auto& row : matrix.rows) labels.push_back(ordinal(row.level));
  return labels;
}

std::vector<int> stratified_kfold(std::span<const int> labels, int k, std::uint64_t seed) {
  if (k < 2) throw Error("k must be >= 2");
  std::map<int, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  for (const auto& [label, rows] : by_class) {
    if (rows.size() < static_cast<std::size_t>(k)) {
      throw Error("class " + std::to_string(label) + " has only " +
                  std::to_string(rows.size()) + " rows, fewer than k=" + std::to_string(k) +
                  "; use a smaller k");
    }
  }
  Rng rng(seed);
  std::vector<int> fold(labels.size(), -1);
  std::size_t next = 0;
  for (auto& [label, rows] : by_class) {
    rng.shuffle(std::span<std::size_t>(rows));
    for (auto r : rows) fold[r] = static_cast<int>(next++ % k);
  }
  return fold;
}

ClassificationMetrics compute_metrics(std::span<const int> truth,
                                      std::span<const int> predicted, int classes) {
  if (truth.size() != predicted.size()) throw Error("metric inputs differ in length");
  ClassificationMetrics m;
  m.confusion.assign(classes, std::vector<int>(classes, 0));
  for (std::size_t i = 0; i < truth.size(); ++i) ++m.confusion[truth[i]][predicted[i]];
  int correct = 0;
  for (int c = 0; c < classes; ++c) correct += m.confusion[c][c];
  m.accuracy = truth.empty() ? 0.0 : static_cast<double>(correct) / truth.size();
  m.precision.assign(classes, 0.0);
  m.recall.assign(classes, 0.0);
  m.f1.assign(classes, 0.0);
  for (int c = 0; c < classes; ++c) {
    int predicted_c = 0;
    int actual_c = 0;
    for (int o = 0; o < classes; ++o) {
      predicted_c += m.confusion[o][c];
      actual_c += m.confusion[c][o];
    }
    const double tp = m.confusion[c][c];
    if (predicted_c > 0) m.precision[c] = tp / predicted_c;
    if (actual_c > 0) m.recall[c] = tp / actual_c;
    const double denom = m.precision[c] + m.recall[c];
    if (denom > 0) m.f1[c] = 2 * m.precision[c] * m.recall[c] / denom;
    m.macro_precision += m.precision[c] / classes;
    m.macro_recall += m.recall[c] / classes;
    m.macro_f1 += m.f1[c] / classes;
  }
  return m;
}

EvaluationReport evaluate(const FeatureMatrix& matrix, const ModelSpec& spec,
                          std::span<const int> fold_of_row, std::uint64_t seed, int jobs,
                          const SearchOptions* search) {
  if (fold_of_row.size() != matrix.rows.size()) {
    throw Error("fold assignment does not match the number of rows");
  }
  const int k = fold_of_row.empty()
                    ? 0
                    : *std::max_element(fold_of_row.begin(), fold_of_row.end()) + 1;
  EvaluationReport report;
  report.spec = spec;
  report.k = k;
  report.seed = seed;
  report.fold_of_row.assign(fold_of_row.begin(), fold_of_row.end());
  report.predictions.assign(matrix.rows.size(), -1);
  report.aggregate.confusion.assign(kNumLevels, std::vector<int>(kNumLevels, 0));

  for (int f = 0; f < k; ++f) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < fold_of_row.size(); ++i) {
      (fold_of_row[i] == f ? test : train).push_back(i);
    }
    if (test.empty()) continue;
    const std::uint64_t fold_seed = splitmix64(seed + static_cast<std::uint64_t>(f));

    FoldReport fr;
    fr.fold = f;
    fr.train_size = train.size();
    fr.test_size = test.size();
    ModelSpec fold_spec = spec;
    if (search != nullptr) {
      const auto found =
          hyperparameter_search(matrix, train, spec.kind, *search, fold_seed, jobs);
      fold_spec = found.best;
      fr.searched_spec = fold_spec;
    }
    const TrainedModel model = fit_model(matrix, train, fold_spec, fold_seed, jobs);
    for (const auto& w : model.warnings) {
      report.warnings.push_back("fold " + std::to_string(f) + ": " + w);
    }
    std::vector<std::size_t> all_cols(matrix.schema.size());
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;

    std::vector<int> truth, predicted;
    for (auto r : test) {
      const auto x = model_row(model, matrix.rows[r], all_cols);
      const int p = model.predict(x);
      report.predictions[r] = p;
      truth.push_back(ordinal(matrix.rows[r].level));
      predicted.push_back(p);
    }
    fr.metrics = compute_metrics(truth, predicted, kNumLevels);
    for (int a = 0; a < kNumLevels; ++a) {
      for (int b = 0; b < kNumLevels; ++b) {
        report.aggregate.confusion[a][b] += fr.metrics.confusion[a][b];
      }
    }
    report.folds.push_back(std::move(fr));
  }

  const double nf = static_cast<double>(report.folds.size());
  auto& agg = report.aggregate;
  agg.precision.assign(kNumLevels, 0.0);
  agg.recall.assign(kNumLevels, 0.0);
  agg.f1.assign(kNumLevels, 0.0);
  for (const auto& fr : report.folds) {
    agg.accuracy += fr.metrics.accuracy;
    agg.macro_precision += fr.metrics.macro_precision;
    agg.macro_recall += fr.metrics.macro_recall;
    agg.macro_f1 += fr.metrics.macro_f1;
    for (int c = 0; c < kNumLevels; ++c) {
      agg.precision[c] += fr.metrics.precision[c];
      agg.recall[c] += fr.metrics.recall[c];
      agg.f1[c] += fr.metrics.f1[c];
    }
  }
  if (nf > 0) {
    for (double* v : {&agg.accuracy, &agg.macro_precision, &agg.macro_recall, &agg.macro_f1}) {
      *v /= nf;
    }
    for (int c = 0; c < kNumLevels; ++c) {
      agg.precision[c] /= nf;
      agg.recall[c] /= nf;
      agg.f1[c] /= nf;
    }
  }
  int correct = 0;
  int total = 0;
  for (int a = 0; a < kNumLevels; ++a) {
    for (int b = 0; b < kNumLevels; ++b) {
      total += agg.confusion[a][b];
      if (a == b) correct += agg.confusion[a][b];
    }
  }
  report.pooled_accuracy = total == 0 ? 0.0 : static_cast<double>(correct) / total;
  return report;
}

EvaluationReport cross_validate(const FeatureMatrix& matrix, const ModelSpec& spec, int k,
                                std::uint64_t seed, int jobs, const SearchOptions* search) {
  const auto labels = labels_of(matrix);
  const auto folds = stratified_kfold(labels, k, seed);
  return evaluate(matrix, spec, folds, seed, jobs, search);
}

}  // namespace tura
