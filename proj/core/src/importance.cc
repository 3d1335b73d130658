#include "tura/importance.h"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "tura/errors.h"
#include "tura/random.h"

namespace tura {

ImportanceReport mdi_report(const TrainedModel& model) {
  if (!model.forest) throw Error("MDI importance requires a random forest model");
  const auto mdi = mdi_importance(*model.forest);
  ImportanceReport report;
  report.method = "mdi";
  for (std::size_t j = 0; j < model.schema.size(); ++j) {
    report.scores.push_back(
        {model.schema.features[j].name, model.schema.features[j].group, mdi[j], 0.0});
  }
  return report;
}

ImportanceReport permutation_importance(const TrainedModel& model,
                                        const FeatureMatrix& eval, int repeats,
                                        std::uint64_t seed) {
  if (repeats < 1) throw ConfigError("repeats must be positive");
  if (eval.rows.empty()) throw Error("evaluation matrix has no rows");
  const std::unordered_set<std::string> trained(model.training_doc_ids.begin(),
                                                model.training_doc_ids.end());
  std::vector<std::string> overlap;
  for (const auto& row : eval.rows) {
    if (trained.contains(row.doc_id)) overlap.push_back(row.doc_id);
  }
  if (!overlap.empty()) {
    std::string msg = "evaluation rows overlap the training documents:";
    for (const auto& id : overlap) msg += " " + id;
    throw Error(msg);
  }

  const auto columns = align_columns(model.schema, eval.schema);
  const std::size_t n = eval.rows.size();
  const std::size_t p = columns.size();
  std::vector<std::vector<double>> x(n);
  std::vector<int> truth(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = model_row(model, eval.rows[i], columns);
    truth[i] = ordinal(eval.rows[i].level);
  }
  auto accuracy = [&](const std::vector<std::vector<double>>& rows) {
    int correct = 0;
    for (std::size_t i = 0; i < n; ++i) correct += model.predict(rows[i]) == truth[i];
    return static_cast<double>(correct) / static_cast<double>(n);
  };

  ImportanceReport report;
  report.method = "permutation";
  report.repeats = repeats;
  report.baseline_accuracy = accuracy(x);
  for (std::size_t j = 0; j < p; ++j) {
    Rng rng(splitmix64(seed + j));
    std::vector<double> drops;
    auto shuffled = x;
    std::vector<double> column(n);
    for (int r = 0; r < repeats; ++r) {
      for (std::size_t i = 0; i < n; ++i) column[i] = x[i][j];
      rng.shuffle(std::span<double>(column));
      for (std::size_t i = 0; i < n; ++i) shuffled[i][j] = column[i];
      drops.push_back(report.baseline_accuracy - accuracy(shuffled));
    }
    double mean = 0.0;
    for (double d : drops) mean += d;
    mean /= repeats;
    double var = 0.0;
    for (double d : drops) var += (d - mean) * (d - mean);
    const double sd = repeats > 1 ? std::sqrt(var / (repeats - 1)) : 0.0;
    report.scores.push_back(
        {model.schema.features[j].name, model.schema.features[j].group, mean, sd});
  }
  return report;
}

}  // namespace tura
