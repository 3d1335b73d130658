#include "tura/features.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "tura/csv.h"
#include "tura/disco.h"
#include "tura/errors.h"
#include "tura/io.h"
#include "tura/lxsm.h"
#include "tura/morph.h"
#include "tura/parallel.h"
#include "tura/synx.h"
#include "tura/text.h"
#include "tura/trad.h"

namespace tura {

namespace {

constexpr std::array<std::string_view, kNumFeatureGroups> kGroupNames = {
    "TRAD", "LXSM", "SYNX", "MORPH", "DISCO", "HYBRID"};

constexpr std::array<FeatureGroup, 5> kLinguisticGroups = {
    FeatureGroup::TRAD, FeatureGroup::LXSM, FeatureGroup::SYNX, FeatureGroup::MORPH,
    FeatureGroup::DISCO};

std::vector<std::string> group_feature_names(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::TRAD:
      return {"atesman", "cetinkaya_uzun", "mean_sentence_len_words",
              "mean_word_len_syllables", "poly3_per100w", "poly4_per100w",
              "poly5plus_per100w"};
    case FeatureGroup::LXSM:
      return {"ttr", "root_ttr", "corrected_ttr", "bilog_ttr", "uber_index", "mattr",
              "noun_var", "verb_var", "adj_var", "adv_var", "lexical_density",
              "early_freq_per_word", "late_freq_per_word", "early_freq_per_sentence",
              "late_freq_per_sentence", "child_corpus_proportion", "familiarity_pct"};
    case FeatureGroup::SYNX: {
      std::vector<std::string> names = {"np_per_sentence", "vp_per_sentence",
                                        "np_per_word", "vp_per_word", "mean_np_len"};
      for (auto rel : kUdRelations) names.push_back("dep_prop_" + std::string(rel));
      names.emplace_back("dep_prop_other");
      for (auto n : {"mean_dep_depth", "max_dep_depth", "mean_const_depth",
                     "max_const_depth"}) {
        names.emplace_back(n);
      }
      for (auto tag : kUposTags) names.push_back("pos_prop_" + std::string(tag));
      return names;
    }
    case FeatureGroup::MORPH:
      return {kMorphFeatureNames.begin(), kMorphFeatureNames.end()};
    case FeatureGroup::DISCO:
      return {"entities_per_sentence", "entities_per100w", "unique_entity_ratio",
              "entity_token_proportion"};
    case FeatureGroup::HYBRID:
      return {"p_ele", "p_int", "p_adv"};
  }
  return {};
}

struct Cells {
  std::vector<double> values;
  std::vector<std::uint8_t> absent;
  void add(double v, bool masked = false) {
    values.push_back(masked ? 0.0 : v);
    absent.push_back(masked ? 1 : 0);
  }
};

void add_trad(Cells& c, const TradFeatures& f) {
  for (double v : {f.atesman_score, f.cetinkaya_score, f.mean_sentence_len_words,
                   f.mean_word_len_syllables, f.poly3_per100w, f.poly4_per100w,
                   f.poly5plus_per100w}) {
    c.add(v);
  }
}

void add_lxsm(Cells& c, const LxsmFeatures& f) {
  for (double v :
       {f.ttr.ttr, f.ttr.root_ttr, f.ttr.corrected_ttr, f.ttr.bilog_ttr,
        f.ttr.uber_index, f.mattr, f.variation.noun_var, f.variation.verb_var,
        f.variation.adj_var, f.variation.adv_var, f.variation.lexical_density,
        f.frequency.early_freq_per_word, f.frequency.late_freq_per_word,
        f.frequency.early_freq_per_sentence, f.frequency.late_freq_per_sentence,
        f.frequency.child_corpus_proportion, f.familiarity_pct}) {
    c.add(v);
  }
}

void add_synx(Cells& c, const SynxFeatures& f) {
  c.add(f.phrases.np_per_sentence);
  c.add(f.phrases.vp_per_sentence);
  c.add(f.phrases.np_per_word);
  c.add(f.phrases.vp_per_word);
  c.add(f.phrases.mean_np_len);
  for (double v : f.dep_prop) c.add(v);
  c.add(f.dep_depth.mean);
  c.add(f.dep_depth.max);
  c.add(f.const_depth.mean, f.const_depth.absent);
  c.add(f.const_depth.max, f.const_depth.absent);
  for (double v : f.pos_prop) c.add(v);
}

void add_morph(Cells& c, const MorphFeatures& f) {
  for (const auto& r : f.values) c.add(r.value, r.absent);
}

void add_disco(Cells& c, const DiscoFeatures& f) {
  for (double v : {f.entities_per_sentence, f.entities_per100w, f.unique_entity_ratio,
                   f.entity_token_proportion}) {
    c.add(v);
  }
}

struct DocOutcome {
  Cells cells;
  PhraseSource phrase_source = PhraseSource::kDependency;
  bool has_trees = false;
  std::array<bool, 6> mci_fallback{};
  std::array<bool, 6> mci_absent{};
  std::string error;
};

}  // namespace

std::string_view group_name(FeatureGroup group) {
  return kGroupNames[static_cast<std::size_t>(group)];
}

std::optional<FeatureGroup> parse_group(std::string_view name) {
  if (name == "SYN") return FeatureGroup::SYNX;
  for (std::size_t i = 0; i < kGroupNames.size(); ++i) {
    if (kGroupNames[i] == name) return static_cast<FeatureGroup>(i);
  }
  return std::nullopt;
}

GroupSet::GroupSet(std::initializer_list<FeatureGroup> groups) {
  for (auto g : groups) insert(g);
}

GroupSet GroupSet::linguistic() {
  GroupSet s;
  for (auto g : kLinguisticGroups) s.insert(g);
  return s;
}

GroupSet GroupSet::parse(std::string_view spec) {
  GroupSet s;
  for (const auto& part : text::split(spec, ',')) {
    const auto name = text::trim(part);
    if (name.empty()) continue;
    if (name == "ALL") {
      for (auto g : kLinguisticGroups) s.insert(g);
      continue;
    }
    const auto g = parse_group(name);
    if (!g) throw ConfigError("unknown feature group: " + std::string(name));
    s.insert(*g);
  }
  if (s.empty()) throw ConfigError("no feature groups selected");
  return s;
}

std::string GroupSet::to_string() const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < kNumFeatureGroups; ++i) {
    if (contains(static_cast<FeatureGroup>(i))) names.emplace_back(kGroupNames[i]);
  }
  return text::join(names, ",");
}

std::optional<std::size_t> FeatureSchema::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (features[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> FeatureSchema::names() const {
  std::vector<std::string> out;
  out.reserve(features.size());
  for (const auto& f : features) out.push_back(f.name);
  return out;
}

const FeatureSchema& full_schema() {
  static const FeatureSchema schema = [] {
    FeatureSchema s;
    for (std::size_t g = 0; g < kNumFeatureGroups; ++g) {
      const auto group = static_cast<FeatureGroup>(g);
      for (const auto& n : group_feature_names(group)) {
        s.features.push_back({std::string(group_name(group)) + "." + n, group});
      }
    }
    return s;
  }();
  return schema;
}

FeatureSchema schema_for(const GroupSet& groups) {
  FeatureSchema s;
  for (const auto& f : full_schema().features) {
    if (groups.contains(f.group)) s.features.push_back(f);
  }
  return s;
}

bool FeatureMatrix::has_masked() const {
  for (const auto& row : rows) {
    for (auto a : row.absent) {
      if (a) return true;
    }
  }
  return false;
}

bool FeatureMatrix::has_group(FeatureGroup g) const {
  return std::any_of(schema.features.begin(), schema.features.end(),
                     [g](const FeatureSpec& f) { return f.group == g; });
}

FeatureMatrix select_groups(const FeatureMatrix& matrix, const GroupSet& groups) {
  std::vector<std::size_t> keep;
  FeatureMatrix out;
  out.schema.version = matrix.schema.version;
  for (std::size_t i = 0; i < matrix.schema.size(); ++i) {
    if (groups.contains(matrix.schema.features[i].group)) {
      keep.push_back(i);
      out.schema.features.push_back(matrix.schema.features[i]);
    }
  }
  for (const auto& row : matrix.rows) {
    FeatureRow r{row.doc_id, row.level, {}, {}};
    for (auto i : keep) {
      r.values.push_back(row.values[i]);
      r.absent.push_back(row.absent[i]);
    }
    out.rows.push_back(std::move(r));
  }
  return out;
}

Extraction extract_all(std::span<const Document> documents, const FeatureConfig& config,
                       const GroupSet& groups, int jobs) {
  if (groups.empty()) throw ConfigError("no feature groups selected");
  if (groups.contains(FeatureGroup::HYBRID)) {
    throw ConfigError("HYBRID features come from soft labels; use fuse");
  }
  std::optional<LxsmResources> lexicons;
  if (groups.contains(FeatureGroup::LXSM)) lexicons = LxsmResources::load(config);

  std::vector<DocOutcome> outcomes(documents.size());
  parallel_for(documents.size(), jobs, [&](std::size_t i) {
    const Document& doc = documents[i];
    DocOutcome& out = outcomes[i];
    try {
      validate_document(doc);
      if (groups.contains(FeatureGroup::TRAD)) add_trad(out.cells, extract_trad(doc, config));
      if (groups.contains(FeatureGroup::LXSM)) {
        add_lxsm(out.cells, extract_lxsm(doc, *lexicons,
                                         static_cast<std::size_t>(config.mattr_window)));
      }
      if (groups.contains(FeatureGroup::SYNX)) {
        const auto synx = extract_synx(doc, config);
        out.phrase_source = synx.phrases.source;
        out.has_trees = !synx.const_depth.absent;
        add_synx(out.cells, synx);
      }
      if (groups.contains(FeatureGroup::MORPH)) {
        const auto morph =
            extract_morph(doc, config.mci_sample_size, config.mci_samples, config.mci_seed);
        for (std::size_t k = 0; k < morph.values.size(); ++k) {
          out.mci_fallback[k] = morph.values[k].fell_back;
          out.mci_absent[k] = morph.values[k].absent;
        }
        add_morph(out.cells, morph);
      }
      if (groups.contains(FeatureGroup::DISCO)) add_disco(out.cells, extract_disco(doc));
    } catch (const Error& e) {
      out.error = e.what();
    }
  });

  std::vector<std::string> failures;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (!outcomes[i].error.empty()) {
      failures.push_back(documents[i].doc_id + ": " + outcomes[i].error);
    }
  }
  if (!failures.empty()) {
    throw Error("feature extraction failed for " + std::to_string(failures.size()) +
                " document(s):\n" + text::join(failures, "\n"));
  }

  Extraction result;
  result.matrix.schema = schema_for(groups);
  result.info.groups = groups.to_string();
  result.info.mci_fallbacks.assign(6, 0);
  result.info.mci_absent.assign(6, 0);
  for (std::size_t i = 0; i < documents.size(); ++i) {
    auto& out = outcomes[i];
    if (out.cells.values.size() != result.matrix.schema.size()) {
      throw Error("internal error: feature count does not match schema");
    }
    result.matrix.rows.push_back({documents[i].doc_id, documents[i].level,
                                  std::move(out.cells.values),
                                  std::move(out.cells.absent)});
    if (groups.contains(FeatureGroup::SYNX)) {
      switch (out.phrase_source) {
        case PhraseSource::kDependency: ++result.info.phrase_from_dependency; break;
        case PhraseSource::kConstituency: ++result.info.phrase_from_constituency; break;
        case PhraseSource::kMixed: ++result.info.phrase_mixed; break;
      }
      if (!out.has_trees) ++result.info.docs_without_trees;
    }
    for (std::size_t k = 0; k < 6; ++k) {
      result.info.mci_fallbacks[k] += out.mci_fallback[k];
      result.info.mci_absent[k] += out.mci_absent[k];
    }
  }
  return result;
}

Imputer Imputer::fit(const FeatureMatrix& matrix, std::span<const std::size_t> train_rows) {
  Imputer imp;
  const std::size_t p = matrix.schema.size();
  imp.means_.assign(p, 0.0);
  for (std::size_t j = 0; j < p; ++j) {
    double sum = 0.0;
    std::size_t n = 0;
    for (auto r : train_rows) {
      const auto& row = matrix.rows[r];
      if (!row.absent[j]) {
        sum += row.values[j];
        ++n;
      }
    }
    if (n > 0) {
      imp.means_[j] = sum / n;
    } else if (!train_rows.empty()) {
      imp.warnings_.push_back(matrix.schema.features[j].name +
                              " is masked in every training row; imputing 0");
    }
  }
  return imp;
}

Imputer Imputer::fit(const FeatureMatrix& matrix) {
  std::vector<std::size_t> all(matrix.rows.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return fit(matrix, all);
}

FeatureRow Imputer::apply(FeatureRow row) const {
  for (std::size_t j = 0; j < row.values.size(); ++j) {
    if (row.absent[j]) {
      row.values[j] = means_[j];
      row.absent[j] = 0;
    }
  }
  return row;
}

std::vector<FeatureRow> impute(const FeatureMatrix& matrix,
                               std::span<const std::size_t> train_rows,
                               std::span<const std::size_t> apply_rows,
                               std::vector<std::string>* warnings) {
  const Imputer imp = Imputer::fit(matrix, train_rows);
  if (warnings != nullptr) {
    warnings->insert(warnings->end(), imp.warnings().begin(), imp.warnings().end());
  }
  std::vector<FeatureRow> out;
  out.reserve(apply_rows.size());
  for (auto r : apply_rows) out.push_back(imp.apply(matrix.rows[r]));
  return out;
}

std::string format_matrix_csv(const FeatureMatrix& matrix) {
  std::string out;
  std::vector<std::string> header = {"doc_id", "level"};
  for (const auto& f : matrix.schema.features) header.push_back(f.name);
  out += csv::format_row(header);
  for (const auto& row : matrix.rows) {
    std::vector<std::string> fields = {row.doc_id, std::string(level_code(row.level))};
    for (std::size_t j = 0; j < row.values.size(); ++j) {
      fields.push_back(row.absent[j] ? std::string() : io::format_double(row.values[j]));
    }
    out += csv::format_row(fields);
  }
  return out;
}

FeatureMatrix parse_matrix_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  csv::Reader reader(in);
  const auto header = reader.next();
  if (!header || header->fields.size() < 2 || header->fields[0] != "doc_id" ||
      header->fields[1] != "level") {
    throw SchemaError("matrix header must start with doc_id,level");
  }
  // Map file columns to canonical positions.
  const FeatureSchema& catalog = full_schema();
  std::vector<std::string> unknown;
  std::map<std::size_t, std::size_t> canonical_to_file;
  for (std::size_t c = 2; c < header->fields.size(); ++c) {
    const auto& name = header->fields[c];
    const auto idx = catalog.index_of(name);
    if (!idx) {
      unknown.push_back(name);
    } else if (!canonical_to_file.emplace(*idx, c).second) {
      throw SchemaError("duplicate column: " + name);
    }
  }
  if (!unknown.empty()) {
    throw SchemaError("unknown feature column(s): " + text::join(unknown, ", "));
  }
  FeatureMatrix m;
  std::vector<std::size_t> file_cols;
  for (const auto& [canonical, file_col] : canonical_to_file) {
    m.schema.features.push_back(catalog.features[canonical]);
    file_cols.push_back(file_col);
  }
  while (auto record = reader.next()) {
    const auto& f = record->fields;
    if (f.size() != header->fields.size()) {
      throw ParseError("matrix row has " + std::to_string(f.size()) + " fields, expected " +
                           std::to_string(header->fields.size()) + ", line " +
                           std::to_string(record->line),
                       record->line);
    }
    FeatureRow row;
    row.doc_id = f[0];
    const auto level = parse_level(f[1]);
    if (!level) {
      throw ParseError("unknown level: " + f[1] + ", line " + std::to_string(record->line),
                       record->line);
    }
    row.level = *level;
    for (auto c : file_cols) {
      if (f[c].empty()) {
        row.values.push_back(0.0);
        row.absent.push_back(1);
      } else {
        try {
          row.values.push_back(io::parse_double(f[c]));
        } catch (const Error& e) {
          throw ParseError(std::string(e.what()) + ", line " + std::to_string(record->line),
                           record->line);
        }
        row.absent.push_back(0);
      }
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

void write_matrix(const FeatureMatrix& matrix, const std::filesystem::path& path) {
  io::write_file_atomic(path, format_matrix_csv(matrix));
}

FeatureMatrix read_matrix(const std::filesystem::path& path) {
  return parse_matrix_csv(io::read_file(path));
}

}  // namespace tura
