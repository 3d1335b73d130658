#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tura/dataset.h"
#include "tura/features.h"
#include "tura/forest.h"
#include "tura/logreg.h"

namespace tura {

enum class ModelKind { kRandomForest, kLogReg };

// "rf" / "logreg".
std::string_view to_string(ModelKind kind);
std::optional<ModelKind> parse_model_kind(std::string_view name);

struct ModelSpec {
  ModelKind kind = ModelKind::kRandomForest;
  ForestParams forest;
  LogRegParams logreg;

  bool operator==(const ModelSpec&) const = default;
};

// A classifier bound to the feature schema and imputation statistics of the
// rows it was trained on.
struct TrainedModel {
  ModelSpec spec;
  FeatureSchema schema;
  std::vector<double> impute_means;
  std::uint64_t seed = 0;
  std::optional<RandomForestModel> forest;
  std::optional<LogisticRegressionModel> logreg;
  std::vector<std::string> training_doc_ids;
  std::vector<std::string> warnings;

  // `row` follows `schema` order and carries no masked values.
  int predict(std::span<const double> row) const;
  std::vector<double> predict_proba(std::span<const double> row) const;
};

Dataset make_dataset(std::span<const FeatureRow> rows, std::size_t cols);

// Imputes with statistics from `rows` only, then trains.
TrainedModel fit_model(const FeatureMatrix& matrix, std::span<const std::size_t> rows,
                       const ModelSpec& spec, std::uint64_t seed, int jobs = 1);
TrainedModel fit_model(const FeatureMatrix& matrix, const ModelSpec& spec,
                       std::uint64_t seed, int jobs = 1);

// For each model feature, its column in `matrix_schema`. Extra matrix columns
// are ignored; missing ones raise SchemaError naming them.
std::vector<std::size_t> align_columns(const FeatureSchema& model_schema,
                                       const FeatureSchema& matrix_schema);

// Row of `matrix` projected onto the model schema with masked cells imputed.
std::vector<double> model_row(const TrainedModel& model, const FeatureRow& row,
                              std::span<const std::size_t> columns);

struct Prediction {
  std::string doc_id;
  ReadingLevel truth = ReadingLevel::kElementary;
  ReadingLevel predicted = ReadingLevel::kElementary;
  std::vector<double> probabilities;
};

std::vector<Prediction> predict_matrix(const TrainedModel& model,
                                       const FeatureMatrix& matrix);

}  // namespace tura
