#include "tura/model.h"

#include "tura/errors.h"
#include "tura/text.h"

namespace tura {

std::string_view to_string(ModelKind kind) {
  return kind == ModelKind::kRandomForest ? "rf" : "logreg";
}

std::optional<ModelKind> parse_model_kind(std::string_view name) {
  if (name == "rf") return ModelKind::kRandomForest;
  if (name == "logreg") return ModelKind::kLogReg;
  return std::nullopt;
}

int TrainedModel::predict(std::span<const double> row) const {
  if (forest) return forest->predict(row);
  if (logreg) return logreg->predict(row);
  throw Error("model has no trained classifier");
}

std::vector<double> TrainedModel::predict_proba(std::span<const double> row) const {
  if (forest) return forest->predict_proba(row);
  if (logreg) return logreg->predict_proba(row);
  throw Error("model has no trained classifier");
}

Dataset make_dataset(std::span<const FeatureRow> rows, std::size_t cols) {
  Dataset d;
  d.cols = cols;
  d.classes = kNumLevels;
  d.x.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    for (auto a : row.absent) {
      if (a) throw TrainingError("masked value in training rows of " + row.doc_id);
    }
    d.add_row(row.values, ordinal(row.level));
  }
  return d;
}

TrainedModel fit_model(const FeatureMatrix& matrix, std::span<const std::size_t> rows,
                       const ModelSpec& spec, std::uint64_t seed, int jobs) {
  if (matrix.schema.size() == 0) throw TrainingError("matrix has no feature columns");
  if (rows.empty()) throw TrainingError("no training rows");
  TrainedModel model;
  model.spec = spec;
  model.schema = matrix.schema;
  model.seed = seed;
  std::vector<std::string> warnings;
  const auto imputed = impute(matrix, rows, rows, &warnings);
  model.warnings = warnings;
  model.impute_means = Imputer::fit(matrix, rows).means();
  for (auto r : rows) model.training_doc_ids.push_back(matrix.rows[r].doc_id);

  const Dataset data = make_dataset(imputed, matrix.schema.size());
  if (spec.kind == ModelKind::kRandomForest) {
    model.forest = train_random_forest(data, spec.forest, seed, jobs);
  } else {
    model.logreg = train_logreg(data, spec.logreg, seed);
    if (!model.logreg->converged) {
      model.warnings.push_back("logistic regression stopped after " +
                               std::to_string(model.logreg->iterations) +
                               " iterations without reaching tol");
    }
  }
  return model;
}

TrainedModel fit_model(const FeatureMatrix& matrix, const ModelSpec& spec,
                       std::uint64_t seed, int jobs) {
  std::vector<std::size_t> all(matrix.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return fit_model(matrix, all, spec, seed, jobs);
}

std::vector<std::size_t> align_columns(const FeatureSchema& model_schema,
                                       const FeatureSchema& matrix_schema) {
  std::vector<std::size_t> columns;
  std::vector<std::string> missing;
  for (const auto& f : model_schema.features) {
    if (const auto idx = matrix_schema.index_of(f.name)) {
      columns.push_back(*idx);
    } else {
      missing.push_back(f.name);
    }
  }
  if (!missing.empty()) {
    throw SchemaError("matrix lacks model feature(s): " + text::join(missing, ", "));
  }
  return columns;
}

std::vector<double> model_row(const TrainedModel& model, const FeatureRow& row,
                              std::span<const std::size_t> columns) {
  std::vector<double> out(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const auto c = columns[j];
    out[j] = row.absent[c] ? model.impute_means[j] : row.values[c];
  }
  return out;
}

std::vector<Prediction> predict_matrix(const TrainedModel& model,
                                       const FeatureMatrix& matrix) {
  const auto columns = align_columns(model.schema, matrix.schema);
  std::vector<Prediction> out;
  out.reserve(matrix.rows.size());
  for (const auto& row : matrix.rows) {
    const auto x = model_row(model, row, columns);
    Prediction p;
    p.doc_id = row.doc_id;
    p.truth = row.level;
    p.predicted = level_from_ordinal(model.predict(x));
    p.probabilities = model.predict_proba(x);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace tura
