#pragma once

#include <array>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tura/features.h"

namespace tura {

// How the external model produced its predictions, from the optional first
// line `# generated: out_of_fold|full_fit`.
enum class SoftLabelProvenance { kUnknown, kOutOfFold, kFullFit };

std::string_view to_string(SoftLabelProvenance provenance);

struct SoftLabelRow {
  std::string doc_id;
  std::array<double, 3> probabilities{};  // ELE, INT, ADV
};

struct SoftLabelTable {
  SoftLabelProvenance provenance = SoftLabelProvenance::kUnknown;
  std::vector<SoftLabelRow> rows;

  const SoftLabelRow* find(std::string_view doc_id) const;
};

inline constexpr double kSimplexTolerance = 1e-6;

// CSV `doc_id,p_ele,p_int,p_adv`. Every offending row is reported in one
// LoadError (simplex violations, duplicates, bad numbers).
SoftLabelTable parse_soft_labels(std::istream& in);
SoftLabelTable load_soft_labels(const std::filesystem::path& path);

// Appends HYBRID.p_ele/p_int/p_adv. Throws SchemaError if the matrix already
// has HYBRID columns and Error listing doc_ids missing from the table.
FeatureMatrix fuse(const FeatureMatrix& matrix, const SoftLabelTable& soft);

}  // namespace tura
