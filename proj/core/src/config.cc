#include "tura/config.h"

#include <json.hpp>

#include "tura/errors.h"
#include "tura/io.h"

namespace tura {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) {
      throw ConfigError("unknown config key: " + (where.empty() ? key : where + "." + key));
    }
  }
}

double get_number(const json& obj, const char* key, double fallback,
                  const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + " must be a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& obj, const char* key, std::int64_t fallback,
                         const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw ConfigError(where + "." + key + " must be an integer");
  }
  return v.get<std::int64_t>();
}

FormulaCoefficients read_formula(const json& obj, const std::string& where,
                                 FormulaCoefficients fallback) {
  reject_unknown(obj, where, {"intercept", "word_length", "sentence_length"});
  return {get_number(obj, "intercept", fallback.intercept, where),
          get_number(obj, "word_length", fallback.word_length, where),
          get_number(obj, "sentence_length", fallback.sentence_length, where)};
}

std::vector<std::string> read_labels(const json& obj, const char* key,
                                     std::vector<std::string> fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_array()) throw ConfigError(std::string("synx.") + key + " must be a list");
  std::vector<std::string> labels;
  for (const auto& item : v) {
    if (!item.is_string()) {
      throw ConfigError(std::string("synx.") + key + " entries must be strings");
    }
    labels.push_back(item.get<std::string>());
  }
  return labels;
}

json formula_json(const FormulaCoefficients& c) {
  return json{{"intercept", c.intercept},
              {"word_length", c.word_length},
              {"sentence_length", c.sentence_length}};
}

}  // namespace

FeatureConfig parse_config(std::string_view text,
                           const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(root, "", {"formulas", "lexicons", "lxsm", "morph", "synx"});

  FeatureConfig config;
  if (root.contains("formulas")) {
    const auto& f = root["formulas"];
    reject_unknown(f, "formulas", {"atesman", "cetinkaya"});
    if (f.contains("atesman")) {
      config.atesman = read_formula(f["atesman"], "formulas.atesman", config.atesman);
    }
    if (f.contains("cetinkaya")) {
      config.cetinkaya =
          read_formula(f["cetinkaya"], "formulas.cetinkaya", config.cetinkaya);
    }
  }
  if (root.contains("lexicons")) {
    const auto& l = root["lexicons"];
    reject_unknown(l, "lexicons", {"early", "late", "basic_words"});
    const auto path_of = [&](const char* key) -> std::optional<std::filesystem::path> {
      if (!l.contains(key) || l[key].is_null()) return std::nullopt;
      if (!l[key].is_string()) {
        throw ConfigError(std::string("lexicons.") + key + " must be a path string");
      }
      std::filesystem::path p = l[key].get<std::string>();
      return p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    };
    config.early_lexicon = path_of("early");
    config.late_lexicon = path_of("late");
    config.basic_words = path_of("basic_words");
  }
  if (root.contains("lxsm")) {
    const auto& l = root["lxsm"];
    reject_unknown(l, "lxsm", {"mattr_window"});
    config.mattr_window =
        static_cast<int>(get_integer(l, "mattr_window", config.mattr_window, "lxsm"));
  }
  if (root.contains("morph")) {
    const auto& m = root["morph"];
    reject_unknown(m, "morph", {"sample_size", "samples", "seed"});
    config.mci_sample_size =
        static_cast<int>(get_integer(m, "sample_size", config.mci_sample_size, "morph"));
    config.mci_samples =
        static_cast<int>(get_integer(m, "samples", config.mci_samples, "morph"));
    const auto seed = get_integer(m, "seed", 0, "morph");
    if (seed < 0) throw ConfigError("morph.seed must be non-negative");
    config.mci_seed = static_cast<std::uint64_t>(seed);
  }
  if (root.contains("synx")) {
    const auto& s = root["synx"];
    reject_unknown(s, "synx", {"np_labels", "vp_labels"});
    config.np_labels = read_labels(s, "np_labels", config.np_labels);
    config.vp_labels = read_labels(s, "vp_labels", config.vp_labels);
  }

  if (config.mattr_window < 1) throw ConfigError("lxsm.mattr_window must be >= 1");
  if (config.mci_sample_size < 2) throw ConfigError("morph.sample_size must be >= 2");
  if (config.mci_samples < 1) throw ConfigError("morph.samples must be >= 1");
  return config;
}

FeatureConfig load_config(const std::filesystem::path& path) {
  return parse_config(io::read_file(path), path.parent_path());
}

std::string config_to_json(const FeatureConfig& config) {
  const auto path_json = [](const std::optional<std::filesystem::path>& p) {
    return p ? json(p->generic_string()) : json(nullptr);
  };
  json root = {
      {"formulas",
       {{"atesman", formula_json(config.atesman)},
        {"cetinkaya", formula_json(config.cetinkaya)}}},
      {"lexicons",
       {{"early", path_json(config.early_lexicon)},
        {"late", path_json(config.late_lexicon)},
        {"basic_words", path_json(config.basic_words)}}},
      {"lxsm", {{"mattr_window", config.mattr_window}}},
      {"morph",
       {{"sample_size", config.mci_sample_size},
        {"samples", config.mci_samples},
        {"seed", config.mci_seed}}},
      {"synx", {{"np_labels", config.np_labels}, {"vp_labels", config.vp_labels}}},
  };
  return root.dump(2) + "\n";
}

}  // namespace tura
