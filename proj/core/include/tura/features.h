#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tura/config.h"
#include "tura/corpus.h"

namespace tura {

enum class FeatureGroup : std::uint8_t { TRAD, LXSM, SYNX, MORPH, DISCO, HYBRID };
inline constexpr std::size_t kNumFeatureGroups = 6;

std::string_view group_name(FeatureGroup group);
std::optional<FeatureGroup> parse_group(std::string_view name);

// Ordered, duplicate-free selection of groups.
class GroupSet {
 public:
  GroupSet() = default;
  GroupSet(std::initializer_list<FeatureGroup> groups);

  // "TRAD,LXSM" or "ALL" (the five linguistic groups). Throws ConfigError.
  static GroupSet parse(std::string_view spec);
  static GroupSet linguistic();

  void insert(FeatureGroup g) { bits_ |= 1u << static_cast<unsigned>(g); }
  bool contains(FeatureGroup g) const { return bits_ & (1u << static_cast<unsigned>(g)); }
  bool empty() const { return bits_ == 0; }
  std::string to_string() const;
  bool operator==(const GroupSet&) const = default;

 private:
  unsigned bits_ = 0;
};

struct FeatureSpec {
  std::string name;  // "<GROUP>.<feature>"
  FeatureGroup group = FeatureGroup::TRAD;

  bool operator==(const FeatureSpec&) const = default;
};

inline constexpr std::string_view kSchemaVersion = "tura-features/1";

struct FeatureSchema {
  std::vector<FeatureSpec> features;
  std::string version{kSchemaVersion};

  std::size_t size() const { return features.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::vector<std::string> names() const;
  bool operator==(const FeatureSchema&) const = default;
};

// Every known feature in canonical order, HYBRID included.
const FeatureSchema& full_schema();
FeatureSchema schema_for(const GroupSet& groups);

struct FeatureRow {
  std::string doc_id;
  ReadingLevel level = ReadingLevel::kElementary;
  std::vector<double> values;
  std::vector<std::uint8_t> absent;  // 1 = masked; value then holds 0

  bool operator==(const FeatureRow&) const = default;
};

struct FeatureMatrix {
  FeatureSchema schema;
  std::vector<FeatureRow> rows;

  bool has_masked() const;
  bool has_group(FeatureGroup g) const;
  bool operator==(const FeatureMatrix&) const = default;
};

// Columns of `matrix` belonging to `groups`, in schema order.
FeatureMatrix select_groups(const FeatureMatrix& matrix, const GroupSet& groups);

struct ExtractionInfo {
  std::string groups;
  std::size_t phrase_from_dependency = 0;
  std::size_t phrase_from_constituency = 0;
  std::size_t phrase_mixed = 0;
  std::size_t docs_without_trees = 0;
  // Per MORPH feature: documents where sampling without replacement fell
  // back to with-replacement, and documents with an empty inventory.
  std::vector<std::size_t> mci_fallbacks;
  std::vector<std::size_t> mci_absent;
};

struct Extraction {
  FeatureMatrix matrix;
  ExtractionInfo info;
};

// Deterministic for fixed (documents, config); independent of `jobs`.
// Per-document failures are collected and rethrown as one Error listing the
// doc_ids.
Extraction extract_all(std::span<const Document> documents, const FeatureConfig& config,
                       const GroupSet& groups, int jobs = 1);

// Train-fold means for masked cells.
class Imputer {
 public:
  Imputer() = default;
  // Columns masked in every training row impute 0 and add a warning.
  static Imputer fit(const FeatureMatrix& matrix, std::span<const std::size_t> train_rows);
  static Imputer fit(const FeatureMatrix& matrix);

  FeatureRow apply(FeatureRow row) const;
  const std::vector<double>& means() const { return means_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

  static Imputer from_means(std::vector<double> means) {
    Imputer imp;
    imp.means_ = std::move(means);
    return imp;
  }

 private:
  std::vector<double> means_;
  std::vector<std::string> warnings_;
};

// Statistics from `train_rows` only; returns `apply_rows` with masked cells
// filled in.
std::vector<FeatureRow> impute(const FeatureMatrix& matrix,
                               std::span<const std::size_t> train_rows,
                               std::span<const std::size_t> apply_rows,
                               std::vector<std::string>* warnings = nullptr);

// CSV: header `doc_id,level,<feature names>`; masked cells are empty.
std::string format_matrix_csv(const FeatureMatrix& matrix);
FeatureMatrix parse_matrix_csv(std::string_view csv);
void write_matrix(const FeatureMatrix& matrix, const std::filesystem::path& path);
FeatureMatrix read_matrix(const std::filesystem::path& path);

}  // namespace tura
