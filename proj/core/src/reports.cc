#include "tura/reports.h"

#include <algorithm>
#include <cstdio>
#include <json.hpp>

#include "tura/csv.h"
#include "tura/io.h"

namespace tura::reports {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json spec_object(const ModelSpec& spec) {
  Json j;
  j["model"] = std::string(to_string(spec.kind));
  if (spec.kind == ModelKind::kRandomForest) {
    j["n_trees"] = spec.forest.n_trees;
    j["mtry"] = spec.forest.mtry;
    j["min_leaf"] = spec.forest.min_leaf;
    j["max_depth"] = spec.forest.max_depth;
  } else {
    j["l2_lambda"] = spec.logreg.l2_lambda;
    j["max_iter"] = spec.logreg.max_iter;
    j["tol"] = spec.logreg.tol;
  }
  return j;
}

Json level_names() {
  Json names = Json::array();
  for (int c = 0; c < kNumLevels; ++c) {
    names.push_back(std::string(level_code(level_from_ordinal(c))));
  }
  return names;
}

Json metrics_object(const ClassificationMetrics& m) {
  Json j;
  j["accuracy"] = m.accuracy;
  j["macro_precision"] = m.macro_precision;
  j["macro_recall"] = m.macro_recall;
  j["macro_f1"] = m.macro_f1;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["confusion"] = m.confusion;
  return j;
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

Json scores_array(const ImportanceReport& report) {
  Json arr = Json::array();
  for (const auto& s : report.scores) {
    Json e;
    e["feature"] = s.feature;
    e["group"] = std::string(group_name(s.group));
    e["score"] = s.score;
    if (report.method == "permutation") e["stddev"] = s.stddev;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace

std::string spec_json(const ModelSpec& spec) { return dump(spec_object(spec)); }

std::string evaluation_json(const EvaluationReport& report) {
  Json j;
  j["spec"] = spec_object(report.spec);
  j["k"] = report.k;
  j["seed"] = report.seed;
  j["classes"] = level_names();
  j["aggregate"] = metrics_object(report.aggregate);
  j["pooled_accuracy"] = report.pooled_accuracy;
  Json folds = Json::array();
  for (const auto& f : report.folds) {
    Json fj;
    fj["fold"] = f.fold;
    fj["train_size"] = f.train_size;
    fj["test_size"] = f.test_size;
    fj["metrics"] = metrics_object(f.metrics);
    if (f.searched_spec) fj["searched_spec"] = spec_object(*f.searched_spec);
    folds.push_back(std::move(fj));
  }
  j["folds"] = folds;
  j["warnings"] = report.warnings;
  return dump(j);
}

std::string evaluation_text(const EvaluationReport& report) {
  std::string out;
  out += "model: " + std::string(to_string(report.spec.kind)) +
         "  k=" + std::to_string(report.k) + "  seed=" + std::to_string(report.seed) + "\n";
  const auto& a = report.aggregate;
  out += "accuracy (fold mean): " + fixed(a.accuracy, 4) + "\n";
  out += "accuracy (pooled):    " + fixed(report.pooled_accuracy, 4) + "\n";
  out += "macro precision:      " + fixed(a.macro_precision, 4) + "\n";
  out += "macro recall:         " + fixed(a.macro_recall, 4) + "\n";
  out += "macro F1:             " + fixed(a.macro_f1, 4) + "\n";
  out += "\nconfusion (rows = truth, columns = predicted)\n";
  out += "     ELE  INT  ADV\n";
  for (int t = 0; t < kNumLevels; ++t) {
    out += std::string(level_code(level_from_ordinal(t)));
    for (int p = 0; p < kNumLevels; ++p) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), " %4d", a.confusion[t][p]);
      out += buf;
    }
    out += "\n";
  }
  for (const auto& w : report.warnings) out += "warning: " + w + "\n";
  return out;
}

std::string search_json(const SearchResult& result) {
  Json j;
  j["best"] = spec_object(result.best);
  j["best_score"] = result.best_score;
  Json trace = Json::array();
  for (const auto& t : result.trace) {
    Json tj;
    tj["stage"] = t.stage;
    tj["spec"] = spec_object(t.spec);
    tj["score"] = t.score;
    trace.push_back(std::move(tj));
  }
  j["trace"] = trace;
  return dump(j);
}

std::string importance_json(const ImportanceReport& report) {
  Json j;
  j["method"] = report.method;
  if (report.method == "permutation") {
    j["baseline_accuracy"] = report.baseline_accuracy;
    j["repeats"] = report.repeats;
  }
  j["scores"] = scores_array(report);
  return dump(j);
}

std::string importance_csv(const ImportanceReport& report) {
  auto scores = report.scores;
  std::stable_sort(scores.begin(), scores.end(),
                   [](const FeatureScore& a, const FeatureScore& b) { return a.score > b.score; });
  std::string out = csv::format_row({"feature", "group", "score", "stddev"});
  for (const auto& s : scores) {
    out += csv::format_row({s.feature, std::string(group_name(s.group)),
                            io::format_double(s.score), io::format_double(s.stddev)});
  }
  return out;
}

std::string correlation_json(const CorrelationReport& report, std::size_t top) {
  Json arr = Json::array();
  const std::size_t n = std::min(top, report.entries.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = report.entries[i];
    Json ej;
    ej["rank"] = i + 1;
    ej["group"] = std::string(group_name(e.group));
    ej["feature"] = e.feature;
    ej["rho"] = e.rho;
    ej["rows"] = e.rows;
    ej["zero_variance"] = e.zero_variance;
    arr.push_back(std::move(ej));
  }
  Json j;
  j["method"] = "spearman";
  j["target"] = "level ordinal (ELE=0, INT=1, ADV=2)";
  j["entries"] = arr;
  return dump(j);
}

std::string correlation_text(const CorrelationReport& report, std::size_t top) {
  const std::size_t n = std::min(top, report.entries.size());
  std::size_t width = 7;
  for (std::size_t i = 0; i < n; ++i) width = std::max(width, report.entries[i].feature.size());
  std::string out = "Group   | Feature" + std::string(width - 7, ' ') + " | rho\n";
  out += std::string(8, '-') + "+" + std::string(width + 2, '-') + "+--------\n";
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = report.entries[i];
    std::string g(group_name(e.group));
    g.resize(7, ' ');
    std::string f = e.feature;
    f.resize(width, ' ');
    out += g + " | " + f + " | " + fixed(e.rho, 3) + (e.zero_variance ? " (zero variance)" : "") + "\n";
  }
  return out;
}

}  // namespace tura::reports
