// tura: Turkish readability assessment from annotated text.
//
// Every command that writes results takes --out DIR and places its outputs
// plus a run.json snapshot (arguments, seed, effective config) there. Files
// are written through a temp-file rename, so a failed run leaves no partial
// output behind.
#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

#include "tura/config.h"
#include "tura/correlation.h"
#include "tura/csv.h"
#include "tura/errors.h"
#include "tura/features.h"
#include "tura/hybrid.h"
#include "tura/importance.h"
#include "tura/io.h"
#include "tura/lxsm.h"
#include "tura/manifest.h"
#include "tura/model.h"
#include "tura/model_io.h"
#include "tura/morph.h"
#include "tura/reports.h"
#include "tura/search.h"
#include "tura/trad.h"
#include "tura/validation.h"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

#ifndef TURA_VERSION
#define TURA_VERSION "0.0.0"
#endif

struct Common {
  std::optional<std::uint64_t> seed;
  int jobs = 0;
};

struct ModelArgs {
  std::string model = "rf";
  int n_trees = 500;
  int mtry = 0;
  int min_leaf = 1;
  int max_depth = 0;
  double lambda = 1.0;
  int max_iter = 1000;
  double tol = 1e-6;
  int search = 0;
  std::string groups;

  tura::ModelSpec spec() const {
    tura::ModelSpec s;
    s.kind = *tura::parse_model_kind(model);
    s.forest = {n_trees, mtry, min_leaf, max_depth};
    s.logreg = {lambda, max_iter, tol};
    return s;
  }
};

void add_model_options(CLI::App* cmd, ModelArgs& m) {
  cmd->add_option("--model", m.model, "Classifier: rf | logreg")
      ->check(CLI::IsMember({"rf", "logreg"}));
  cmd->add_option("--n-trees", m.n_trees, "Random forest: number of trees")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--mtry", m.mtry, "Random forest: features per split (0 = sqrt(p))")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--min-leaf", m.min_leaf, "Random forest: minimum rows per leaf")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", m.max_depth, "Random forest: depth limit (0 = none)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--lambda", m.lambda, "Logistic regression: L2 strength")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-iter", m.max_iter, "Logistic regression: iteration cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--tol", m.tol, "Logistic regression: gradient-norm tolerance");
  cmd->add_option("--search", m.search,
                  "Randomized + grid hyperparameter search with this many random trials")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--groups", m.groups, "Use only these feature groups of the matrix");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--jobs", c.jobs, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
}

Json model_args_json(const ModelArgs& m) {
  Json j = Json::parse(tura::reports::spec_json(m.spec()));
  j["search"] = m.search;
  if (!m.groups.empty()) j["groups"] = m.groups;
  return j;
}

fs::path meta_path(const fs::path& matrix) {
  return matrix.parent_path() / (matrix.stem().string() + ".meta.json");
}

Json read_meta(const fs::path& matrix) {
  const fs::path p = meta_path(matrix);
  if (!fs::exists(p)) return nullptr;
  try {
    return Json::parse(tura::io::read_file(p));
  } catch (const Json::exception& e) {
    throw tura::Error("malformed metadata " + p.string() + ": " + e.what());
  }
}

tura::FeatureMatrix load_matrix(const std::string& path, const std::string& groups) {
  auto matrix = tura::read_matrix(path);
  if (!groups.empty()) {
    const auto set = tura::GroupSet::parse(groups);
    for (auto g : {tura::FeatureGroup::TRAD, tura::FeatureGroup::LXSM, tura::FeatureGroup::SYNX,
                   tura::FeatureGroup::MORPH, tura::FeatureGroup::DISCO,
                   tura::FeatureGroup::HYBRID}) {
      if (set.contains(g) && !matrix.has_group(g)) {
        throw tura::SchemaError("matrix has no " + std::string(tura::group_name(g)) +
                                " columns");
      }
    }
    matrix = tura::select_groups(matrix, set);
  }
  if (matrix.rows.empty()) throw tura::Error("matrix " + path + " has no rows");
  return matrix;
}

tura::FeatureConfig effective_config(const std::string& path, const Common& common) {
  tura::FeatureConfig config = path.empty() ? tura::FeatureConfig{} : tura::load_config(path);
  if (common.seed) config.mci_seed = *common.seed;
  return config;
}

class Output {
 public:
  explicit Output(std::string dir) : dir_(std::move(dir)) {}

  void add(const std::string& name, std::string content) {
    files_.emplace_back(name, std::move(content));
  }

  void commit() const {
    fs::create_directories(dir_);
    for (const auto& [name, content] : files_) tura::io::write_file_atomic(dir_ / name, content);
  }

 private:
  fs::path dir_;
  std::vector<std::pair<std::string, std::string>> files_;
};

std::string run_json(const std::string& command, Json args, const Json& extra = nullptr) {
  Json j;
  j["tool"] = "tura";
  j["version"] = TURA_VERSION;
  j["command"] = command;
  j["args"] = std::move(args);
  if (!extra.is_null()) {
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  }
  return j.dump(2) + "\n";
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// corpus-stats ---------------------------------------------------------------

struct StatsArgs {
  std::string manifest;
  std::string config;
  std::string out;
};

int run_corpus_stats(const StatsArgs& a) {
  const auto corpus = tura::load_manifest(a.manifest);
  if (corpus.documents.empty()) throw tura::Error("manifest lists no documents");
  const tura::FeatureConfig config =
      a.config.empty() ? tura::FeatureConfig{} : tura::load_config(a.config);

  struct Acc {
    std::vector<double> words, atesman, cetinkaya, ttr;
  };
  std::array<Acc, tura::kNumLevels> acc;
  for (const auto& doc : corpus.documents) {
    const auto trad = tura::extract_trad(doc, config);
    const auto forms = tura::normalized_word_forms(doc);
    const std::set<std::string> types(forms.begin(), forms.end());
    auto& level = acc[tura::ordinal(doc.level)];
    level.words.push_back(static_cast<double>(forms.size()));
    level.atesman.push_back(trad.atesman_score);
    level.cetinkaya.push_back(trad.cetinkaya_score);
    level.ttr.push_back(tura::ttr_family(types.size(), forms.size()).ttr);
  }
  auto mean = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
  };
  auto sd = [&](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double s = 0.0;
    for (double x : v) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(v.size() - 1));
  };

  Json rows = Json::array();
  std::string text = "Level | Articles | Mean words | Std words | Atesman | Cetinkaya | TTR\n";
  text += "------+----------+------------+-----------+---------+-----------+-------\n";
  for (int lv = 0; lv < tura::kNumLevels; ++lv) {
    const auto& l = acc[lv];
    const std::string code(tura::level_code(tura::level_from_ordinal(lv)));
    Json r;
    r["level"] = code;
    r["articles"] = l.words.size();
    r["mean_words"] = mean(l.words);
    r["std_words"] = sd(l.words);
    r["mean_atesman"] = mean(l.atesman);
    r["mean_cetinkaya"] = mean(l.cetinkaya);
    r["mean_ttr"] = mean(l.ttr);
    rows.push_back(r);
    char line[160];
    std::snprintf(line, sizeof(line), "%-5s | %8zu | %10s | %9s | %7s | %9s | %s\n", code.c_str(),
                  l.words.size(), fixed(mean(l.words), 2).c_str(), fixed(sd(l.words), 2).c_str(),
                  fixed(mean(l.atesman), 2).c_str(), fixed(mean(l.cetinkaya), 2).c_str(),
                  fixed(mean(l.ttr), 3).c_str());
    text += line;
  }
  std::cout << text;
  if (!a.out.empty()) {
    Json j;
    j["levels"] = rows;
    Output out(a.out);
    out.add("corpus_stats.json", j.dump(2) + "\n");
    out.add("corpus_stats.txt", text);
    Json args;
    args["manifest"] = a.manifest;
    args["config"] = a.config;
    Json extra;
    extra["config"] = Json::parse(tura::config_to_json(config));
    out.add("run.json", run_json("corpus-stats", args, extra));
    out.commit();
  }
  return 0;
}

// extract --------------------------------------------------------------------

struct ExtractArgs {
  std::string manifest;
  std::string groups = "ALL";
  std::string config;
  std::string out;
  Common common;
};

int run_extract(const ExtractArgs& a) {
  const auto groups = tura::GroupSet::parse(a.groups);
  if (groups.contains(tura::FeatureGroup::HYBRID)) {
    throw tura::ConfigError("HYBRID columns come from `tura fuse`, not extraction");
  }
  const auto config = effective_config(a.config, a.common);
  const auto corpus = tura::load_manifest(a.manifest);
  if (corpus.documents.empty()) throw tura::Error("manifest lists no documents");
  const auto extraction = tura::extract_all(corpus.documents, config, groups, a.common.jobs);
  const auto& info = extraction.info;

  Json meta;
  meta["schema_version"] = std::string(tura::kSchemaVersion);
  meta["groups"] = groups.to_string();
  meta["seed"] = config.mci_seed;
  meta["manifest"] = a.manifest;
  meta["documents"] = corpus.documents.size();
  meta["config"] = Json::parse(tura::config_to_json(config));
  Json ex;
  ex["phrase_source"] = {{"dependency", info.phrase_from_dependency},
                         {"constituency", info.phrase_from_constituency},
                         {"mixed", info.phrase_mixed}};
  ex["documents_without_trees"] = info.docs_without_trees;
  if (!info.mci_fallbacks.empty()) {
    Json fallbacks, absent;
    for (std::size_t i = 0; i < info.mci_fallbacks.size(); ++i) {
      fallbacks[std::string(tura::kMorphFeatureNames[i])] = info.mci_fallbacks[i];
      absent[std::string(tura::kMorphFeatureNames[i])] = info.mci_absent[i];
    }
    ex["mci_with_replacement_fallbacks"] = fallbacks;
    ex["mci_absent"] = absent;
  }
  meta["extraction"] = ex;

  Output out(a.out);
  out.add("features.csv", tura::format_matrix_csv(extraction.matrix));
  out.add("features.meta.json", meta.dump(2) + "\n");
  Json args;
  args["manifest"] = a.manifest;
  args["groups"] = a.groups;
  args["config"] = a.config;
  out.add("run.json", run_json("extract", args, {{"seed", config.mci_seed}}));
  out.commit();
  std::cerr << "extracted " << extraction.matrix.rows.size() << " documents x "
            << extraction.matrix.schema.size() << " features\n";
  return 0;
}

// cv -------------------------------------------------------------------------

struct CvArgs {
  std::string matrix;
  std::string out;
  int k = 10;
  ModelArgs model;
  Common common;
};

void require_out_of_fold(const tura::FeatureMatrix& matrix, const std::string& path) {
  if (!matrix.has_group(tura::FeatureGroup::HYBRID)) return;
  const Json meta = read_meta(path);
  std::string provenance = "unknown";
  if (meta.is_object() && meta.contains("soft_labels")) {
    provenance = meta["soft_labels"].value("provenance", "unknown");
  }
  if (provenance != "out_of_fold") {
    throw tura::Error(
        "refusing to cross-validate a fused matrix whose soft labels are not declared "
        "out_of_fold (provenance: " + provenance +
        "); regenerate them out-of-fold and add `# generated: out_of_fold`");
  }
}

int run_cv(const CvArgs& a) {
  const auto matrix = load_matrix(a.matrix, a.model.groups);
  require_out_of_fold(matrix, a.matrix);
  const std::uint64_t seed = a.common.seed.value_or(0);
  tura::SearchOptions search;
  search.budget = a.model.search;
  const auto report = tura::cross_validate(matrix, a.model.spec(), a.k, seed, a.common.jobs,
                                           a.model.search > 0 ? &search : nullptr);

  std::string predictions = tura::csv::format_row({"doc_id", "truth", "predicted", "fold"});
  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    predictions += tura::csv::format_row(
        {matrix.rows[i].doc_id, std::string(tura::level_code(matrix.rows[i].level)),
         std::string(tura::level_code(tura::level_from_ordinal(report.predictions[i]))),
         std::to_string(report.fold_of_row[i])});
  }
  const std::string text = tura::reports::evaluation_text(report);
  Output out(a.out);
  out.add("report.json", tura::reports::evaluation_json(report));
  out.add("report.txt", text);
  out.add("predictions.csv", predictions);
  Json args = model_args_json(a.model);
  args["matrix"] = a.matrix;
  args["k"] = a.k;
  Json extra;
  extra["seed"] = seed;
  extra["matrix_meta"] = read_meta(a.matrix);
  out.add("run.json", run_json("cv", args, extra));
  out.commit();
  std::cout << text;
  return 0;
}

// train ----------------------------------------------------------------------

struct TrainArgs {
  std::string matrix;
  std::string out;
  ModelArgs model;
  Common common;
};

int run_train(const TrainArgs& a) {
  const auto matrix = load_matrix(a.matrix, a.model.groups);
  const std::uint64_t seed = a.common.seed.value_or(0);
  tura::ModelSpec spec = a.model.spec();
  Output out(a.out);
  if (a.model.search > 0) {
    tura::SearchOptions options;
    options.budget = a.model.search;
    std::vector<std::size_t> rows(matrix.rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
    const auto result =
        tura::hyperparameter_search(matrix, rows, spec.kind, options, seed, a.common.jobs);
    spec = result.best;
    out.add("search.json", tura::reports::search_json(result));
  }
  const auto model = tura::fit_model(matrix, spec, seed, a.common.jobs);
  for (const auto& w : model.warnings) std::cerr << "warning: " << w << "\n";
  out.add("model.json", tura::model_to_json(model));
  Json args = model_args_json(a.model);
  args["matrix"] = a.matrix;
  Json extra;
  extra["seed"] = seed;
  extra["trained_spec"] = Json::parse(tura::reports::spec_json(spec));
  extra["matrix_meta"] = read_meta(a.matrix);
  out.add("run.json", run_json("train", args, extra));
  out.commit();
  std::cerr << "trained " << tura::to_string(spec.kind) << " on " << matrix.rows.size()
            << " documents x " << matrix.schema.size() << " features\n";
  return 0;
}

// predict --------------------------------------------------------------------

struct PredictArgs {
  std::string model;
  std::string matrix;
  std::string conllu;
  std::string trees;
  std::string config;
  std::string out;
  Common common;
};

fs::path model_file(const std::string& path) {
  fs::path p(path);
  if (fs::is_directory(p)) p /= "model.json";
  return p;
}

int run_predict(const PredictArgs& a) {
  if (a.matrix.empty() == a.conllu.empty()) {
    throw tura::ConfigError("give exactly one of --matrix or --conllu");
  }
  const auto model = tura::load_model(model_file(a.model));
  tura::FeatureMatrix matrix;
  const bool single = !a.conllu.empty();
  if (single) {
    tura::GroupSet groups;
    for (const auto& f : model.schema.features) groups.insert(f.group);
    if (groups.contains(tura::FeatureGroup::HYBRID)) {
      throw tura::ConfigError("model uses HYBRID features; predict on a fused matrix instead");
    }
    const auto config = effective_config(a.config, a.common);
    tura::ManifestRow row;
    row.doc_id = fs::path(a.conllu).stem().string();
    row.conllu_path = a.conllu;
    if (!a.trees.empty()) row.trees_path = a.trees;
    const std::vector<tura::Document> docs{tura::load_document(row)};
    matrix = tura::extract_all(docs, config, groups, a.common.jobs).matrix;
  } else {
    matrix = tura::read_matrix(a.matrix);
  }
  const auto predictions = tura::predict_matrix(model, matrix);

  std::string csv = tura::csv::format_row({"doc_id", "truth", "predicted", "p_ele", "p_int", "p_adv"});
  for (const auto& p : predictions) {
    std::vector<std::string> fields{p.doc_id,
                                    single ? "" : std::string(tura::level_code(p.truth)),
                                    std::string(tura::level_code(p.predicted))};
    for (double v : p.probabilities) fields.push_back(tura::io::format_double(v));
    csv += tura::csv::format_row(fields);
  }
  if (a.out.empty()) {
    std::cout << csv;
    return 0;
  }
  Output out(a.out);
  out.add("predictions.csv", csv);
  Json args;
  args["model"] = a.model;
  args["matrix"] = a.matrix;
  args["conllu"] = a.conllu;
  args["trees"] = a.trees;
  args["config"] = a.config;
  out.add("run.json", run_json("predict", args, {{"seed", a.common.seed.value_or(0)}}));
  out.commit();
  std::cout << csv;
  return 0;
}

// importance -----------------------------------------------------------------

struct ImportanceArgs {
  std::string model;
  std::string matrix;
  std::string method = "mdi";
  int repeats = 10;
  std::string out;
  Common common;
};

int run_importance(const ImportanceArgs& a) {
  const auto model = tura::load_model(model_file(a.model));
  const std::uint64_t seed = a.common.seed.value_or(0);
  tura::ImportanceReport report;
  if (a.method == "mdi") {
    report = tura::mdi_report(model);
  } else {
    if (a.matrix.empty()) {
      throw tura::ConfigError("permutation importance needs --matrix with held-out documents");
    }
    report = tura::permutation_importance(model, tura::read_matrix(a.matrix), a.repeats, seed);
  }
  Output out(a.out);
  const std::string csv = tura::reports::importance_csv(report);
  out.add("importance.json", tura::reports::importance_json(report));
  out.add("importance.csv", csv);
  Json args;
  args["model"] = a.model;
  args["matrix"] = a.matrix;
  args["method"] = a.method;
  args["repeats"] = a.repeats;
  out.add("run.json", run_json("importance", args, {{"seed", seed}}));
  out.commit();
  std::cout << csv;
  return 0;
}

// correlate ------------------------------------------------------------------

struct CorrelateArgs {
  std::string matrix;
  std::size_t top = 10;
  std::string out;
};

int run_correlate(const CorrelateArgs& a) {
  const auto matrix = tura::read_matrix(a.matrix);
  const auto report = tura::spearman_correlation(matrix);
  const std::string text = tura::reports::correlation_text(report, a.top);
  if (!a.out.empty()) {
    Output out(a.out);
    out.add("correlation.json", tura::reports::correlation_json(report, a.top));
    out.add("correlation.txt", text);
    Json args;
    args["matrix"] = a.matrix;
    args["top"] = a.top;
    out.add("run.json", run_json("correlate", args, {{"matrix_meta", read_meta(a.matrix)}}));
    out.commit();
  }
  std::cout << text;
  return 0;
}

// fuse -----------------------------------------------------------------------

struct FuseArgs {
  std::string matrix;
  std::string soft_labels;
  std::string out;
};

int run_fuse(const FuseArgs& a) {
  const auto matrix = tura::read_matrix(a.matrix);
  const auto soft = tura::load_soft_labels(a.soft_labels);
  const auto fused = tura::fuse(matrix, soft);
  Json meta = read_meta(a.matrix);
  if (!meta.is_object()) meta = Json::object();
  meta["groups"] = meta.value("groups", std::string()) +
                   (meta.value("groups", std::string()).empty() ? "HYBRID" : ",HYBRID");
  meta["soft_labels"] = {{"path", a.soft_labels},
                         {"provenance", std::string(tura::to_string(soft.provenance))}};
  Output out(a.out);
  out.add("features.csv", tura::format_matrix_csv(fused));
  out.add("features.meta.json", meta.dump(2) + "\n");
  Json args;
  args["matrix"] = a.matrix;
  args["soft_labels"] = a.soft_labels;
  out.add("run.json", run_json("fuse", args));
  out.commit();
  if (soft.provenance != tura::SoftLabelProvenance::kOutOfFold) {
    std::cerr << "warning: soft labels are not declared out_of_fold; `tura cv` will refuse "
                 "this matrix\n";
  }
  std::cerr << "fused " << fused.rows.size() << " documents x " << fused.schema.size()
            << " features\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tura: Turkish readability assessment"};
  app.set_version_flag("--version", TURA_VERSION);
  app.require_subcommand(1);

  StatsArgs stats;
  auto* cmd_stats = app.add_subcommand("corpus-stats", "Per-level corpus statistics");
  cmd_stats->add_option("--manifest", stats.manifest, "Corpus manifest CSV")->required();
  cmd_stats->add_option("--config", stats.config, "Feature config JSON");
  cmd_stats->add_option("--out", stats.out, "Also write results to this directory");

  ExtractArgs extract;
  auto* cmd_extract = app.add_subcommand("extract", "Extract the feature matrix");
  cmd_extract->add_option("--manifest", extract.manifest, "Corpus manifest CSV")->required();
  cmd_extract->add_option("--groups", extract.groups,
                          "Feature groups, e.g. TRAD,LXSM or ALL");
  cmd_extract->add_option("--config", extract.config, "Feature config JSON");
  cmd_extract->add_option("--out", extract.out, "Output directory")->required();
  add_common(cmd_extract, extract.common);

  CvArgs cv;
  auto* cmd_cv = app.add_subcommand("cv", "Stratified k-fold cross-validation");
  cmd_cv->add_option("--matrix", cv.matrix, "Feature matrix CSV")->required();
  cmd_cv->add_option("--k", cv.k, "Number of folds")->check(CLI::Range(2, 1000));
  cmd_cv->add_option("--out", cv.out, "Output directory")->required();
  add_model_options(cmd_cv, cv.model);
  add_common(cmd_cv, cv.common);

  TrainArgs train;
  auto* cmd_train = app.add_subcommand("train", "Train a model on the whole matrix");
  cmd_train->add_option("--matrix", train.matrix, "Feature matrix CSV")->required();
  cmd_train->add_option("--out", train.out, "Output directory")->required();
  add_model_options(cmd_train, train.model);
  add_common(cmd_train, train.common);

  PredictArgs predict;
  auto* cmd_predict = app.add_subcommand("predict", "Predict reading levels");
  cmd_predict->add_option("--model", predict.model, "model.json or its directory")->required();
  cmd_predict->add_option("--matrix", predict.matrix, "Feature matrix CSV");
  cmd_predict->add_option("--conllu", predict.conllu, "A single CoNLL-U document");
  cmd_predict->add_option("--trees", predict.trees, "Trees for --conllu");
  cmd_predict->add_option("--config", predict.config, "Feature config JSON for --conllu");
  cmd_predict->add_option("--out", predict.out, "Output directory (default: stdout only)");
  add_common(cmd_predict, predict.common);

  ImportanceArgs importance;
  auto* cmd_importance = app.add_subcommand("importance", "Feature importance");
  cmd_importance->add_option("--model", importance.model, "model.json or its directory")
      ->required();
  cmd_importance->add_option("--matrix", importance.matrix,
                             "Held-out matrix (permutation method)");
  cmd_importance->add_option("--method", importance.method, "mdi | permutation")
      ->check(CLI::IsMember({"mdi", "permutation"}));
  cmd_importance->add_option("--repeats", importance.repeats, "Permutation repeats")
      ->check(CLI::PositiveNumber);
  cmd_importance->add_option("--out", importance.out, "Output directory")->required();
  add_common(cmd_importance, importance.common);

  CorrelateArgs correlate;
  auto* cmd_correlate =
      app.add_subcommand("correlate", "Spearman correlation of features with level");
  cmd_correlate->add_option("--matrix", correlate.matrix, "Feature matrix CSV")->required();
  cmd_correlate->add_option("--top", correlate.top, "Rows to report");
  cmd_correlate->add_option("--out", correlate.out, "Also write results to this directory");

  FuseArgs fuse;
  auto* cmd_fuse = app.add_subcommand("fuse", "Append external soft labels (HYBRID)");
  cmd_fuse->add_option("--matrix", fuse.matrix, "Feature matrix CSV")->required();
  cmd_fuse->add_option("--soft-labels", fuse.soft_labels, "Soft-label CSV")->required();
  cmd_fuse->add_option("--out", fuse.out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_stats) return run_corpus_stats(stats);
    if (*cmd_extract) return run_extract(extract);
    if (*cmd_cv) return run_cv(cv);
    if (*cmd_train) return run_train(train);
    if (*cmd_predict) return run_predict(predict);
    if (*cmd_importance) return run_importance(importance);
    if (*cmd_correlate) return run_correlate(correlate);
    if (*cmd_fuse) return run_fuse(fuse);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
