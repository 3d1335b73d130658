#include "tura/model_io.h"

#include <json.hpp>

#include "tura/errors.h"
#include "tura/io.h"

namespace tura {
namespace {

using nlohmann::json;

json tree_to_json(const DecisionTree& tree) {
  json feature = json::array(), threshold = json::array(), left = json::array(),
       right = json::array(), counts = json::array(), decrease = json::array();
  for (const auto& n : tree.nodes) {
    feature.push_back(n.feature);
    threshold.push_back(n.threshold);
    left.push_back(n.left);
    right.push_back(n.right);
    counts.push_back(n.class_counts);
    decrease.push_back(n.weighted_decrease);
  }
  return {{"feature", feature}, {"threshold", threshold}, {"left", left},
          {"right", right},     {"counts", counts},       {"decrease", decrease}};
}

DecisionTree tree_from_json(const json& j) {
  DecisionTree tree;
  const auto& feature = j.at("feature");
  const std::size_t n = feature.size();
  for (const char* key : {"threshold", "left", "right", "counts", "decrease"}) {
    if (j.at(key).size() != n) throw SchemaError(std::string("tree array size mismatch: ") + key);
  }
  tree.nodes.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& node = tree.nodes[i];
    node.feature = feature[i].get<int>();
    node.threshold = j["threshold"][i].get<double>();
    node.left = j["left"][i].get<int>();
    node.right = j["right"][i].get<int>();
    node.class_counts = j["counts"][i].get<std::vector<int>>();
    node.weighted_decrease = j["decrease"][i].get<double>();
    if (!node.is_leaf()) {
      const int nn = static_cast<int>(n);
      if (node.left <= static_cast<int>(i) || node.left >= nn || node.right <= static_cast<int>(i) ||
          node.right >= nn) {
        throw SchemaError("tree node " + std::to_string(i) + " has invalid children");
      }
    }
  }
  if (n == 0) throw SchemaError("empty tree");
  return tree;
}

json spec_to_json(const ModelSpec& spec) {
  return {{"kind", std::string(to_string(spec.kind))},
          {"forest",
           {{"n_trees", spec.forest.n_trees},
            {"mtry", spec.forest.mtry},
            {"min_leaf", spec.forest.min_leaf},
            {"max_depth", spec.forest.max_depth}}},
          {"logreg",
           {{"l2_lambda", spec.logreg.l2_lambda},
            {"max_iter", spec.logreg.max_iter},
            {"tol", spec.logreg.tol}}}};
}

ModelSpec spec_from_json(const json& j) {
  ModelSpec spec;
  const auto kind = parse_model_kind(j.at("kind").get<std::string>());
  if (!kind) throw SchemaError("unknown model kind");
  spec.kind = *kind;
  const auto& f = j.at("forest");
  spec.forest.n_trees = f.at("n_trees").get<int>();
  spec.forest.mtry = f.at("mtry").get<int>();
  spec.forest.min_leaf = f.at("min_leaf").get<int>();
  spec.forest.max_depth = f.at("max_depth").get<int>();
  const auto& l = j.at("logreg");
  spec.logreg.l2_lambda = l.at("l2_lambda").get<double>();
  spec.logreg.max_iter = l.at("max_iter").get<int>();
  spec.logreg.tol = l.at("tol").get<double>();
  return spec;
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
  json j;
  j["format"] = "tura-model";
  j["format_version"] = kModelFormatVersion;
  j["schema_version"] = model.schema.version;
  j["features"] = model.schema.names();
  j["spec"] = spec_to_json(model.spec);
  j["seed"] = model.seed;
  j["impute_means"] = model.impute_means;
  j["training_doc_ids"] = model.training_doc_ids;
  j["warnings"] = model.warnings;
  if (model.forest) {
    const auto& f = *model.forest;
    json trees = json::array();
    for (const auto& t : f.trees) trees.push_back(tree_to_json(t));
    j["forest"] = {{"params", spec_to_json({ModelKind::kRandomForest, f.params, {}})["forest"]},
                   {"seed", f.seed},
                   {"classes", f.classes},
                   {"features", f.features},
                   {"trees", trees}};
  }
  if (model.logreg) {
    const auto& m = *model.logreg;
    j["logreg"] = {{"classes", m.classes},
                   {"features", m.features},
                   {"weights", m.weights},
                   {"bias", m.bias},
                   {"mean", m.mean},
                   {"scale", m.scale},
                   {"params", spec_to_json({ModelKind::kLogReg, {}, m.params})["logreg"]},
                   {"iterations", m.iterations},
                   {"gradient_norm", m.gradient_norm},
                   {"converged", m.converged}};
  }
  return j.dump(1) + "\n";
}

TrainedModel model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed model JSON: ") + e.what(), e.byte);
  }
  try {
    if (j.value("format", std::string()) != "tura-model") {
      throw SchemaError("not a model file");
    }
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw SchemaError("model format version " + std::to_string(version) +
                        " is not supported (expected " +
                        std::to_string(kModelFormatVersion) + ")");
    }
    const auto schema_version = j.at("schema_version").get<std::string>();
    if (schema_version != kSchemaVersion) {
      throw SchemaError("feature schema version '" + schema_version + "' is not supported");
    }
    TrainedModel model;
    for (const auto& name : j.at("features").get<std::vector<std::string>>()) {
      const auto idx = full_schema().index_of(name);
      if (!idx) throw SchemaError("unknown feature in model: " + name);
      model.schema.features.push_back(full_schema().features[*idx]);
    }
    model.spec = spec_from_json(j.at("spec"));
    model.seed = j.at("seed").get<std::uint64_t>();
    model.impute_means = j.at("impute_means").get<std::vector<double>>();
    model.training_doc_ids = j.at("training_doc_ids").get<std::vector<std::string>>();
    model.warnings = j.value("warnings", std::vector<std::string>{});
    const std::size_t p = model.schema.size();
    if (model.impute_means.size() != p) throw SchemaError("impute_means size mismatch");
    if (j.contains("forest")) {
      const auto& f = j["forest"];
      RandomForestModel forest;
      ModelSpec tmp = spec_from_json({{"kind", "rf"}, {"forest", f.at("params")},
                                      {"logreg", spec_to_json({})["logreg"]}});
      forest.params = tmp.forest;
      forest.seed = f.at("seed").get<std::uint64_t>();
      forest.classes = f.at("classes").get<int>();
      forest.features = f.at("features").get<std::size_t>();
      if (forest.features != p) throw SchemaError("forest feature count mismatch");
      for (const auto& t : f.at("trees")) {
        forest.trees.push_back(tree_from_json(t));
        for (const auto& node : forest.trees.back().nodes) {
          if (node.feature >= static_cast<int>(p)) throw SchemaError("tree feature out of range");
        }
      }
      model.forest = std::move(forest);
    }
    if (j.contains("logreg")) {
      const auto& l = j["logreg"];
      LogisticRegressionModel m;
      m.classes = l.at("classes").get<int>();
      m.features = l.at("features").get<std::size_t>();
      m.weights = l.at("weights").get<std::vector<double>>();
      m.bias = l.at("bias").get<std::vector<double>>();
      m.mean = l.at("mean").get<std::vector<double>>();
      m.scale = l.at("scale").get<std::vector<double>>();
      ModelSpec tmp = spec_from_json({{"kind", "logreg"},
                                      {"forest", spec_to_json({})["forest"]},
                                      {"logreg", l.at("params")}});
      m.params = tmp.logreg;
      m.iterations = l.at("iterations").get<int>();
      m.gradient_norm = l.at("gradient_norm").get<double>();
      m.converged = l.at("converged").get<bool>();
      if (m.features != p || m.weights.size() != m.features * m.classes ||
          m.bias.size() != static_cast<std::size_t>(m.classes) || m.mean.size() != p ||
          m.scale.size() != p) {
        throw SchemaError("logistic regression parameter sizes do not match the schema");
      }
      model.logreg = std::move(m);
    }
    if (!model.forest && !model.logreg) throw SchemaError("model has no classifier");
    return model;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid model file: ") + e.what());
  }
}

void save_model(const TrainedModel& model, const std::filesystem::path& path) {
  io::write_file_atomic(path, model_to_json(model));
}

TrainedModel load_model(const std::filesystem::path& path) {
  return model_from_json(io::read_file(path));
}

}  // namespace tura
