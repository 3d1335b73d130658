#include "tura/hybrid.h"

#include <cmath>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tura/csv.h"
#include "tura/errors.h"
#include "tura/io.h"
#include "tura/text.h"

namespace tura {

std::string_view to_string(SoftLabelProvenance provenance) {
  switch (provenance) {
    case SoftLabelProvenance::kOutOfFold:
      return "out_of_fold";
    case SoftLabelProvenance::kFullFit:
      return "full_fit";
    case SoftLabelProvenance::kUnknown:
      break;
  }
  return "unknown";
}

const SoftLabelRow* SoftLabelTable::find(std::string_view doc_id) const {
  for (const auto& row : rows) {
    if (row.doc_id == doc_id) return &row;
  }
  return nullptr;
}

SoftLabelTable parse_soft_labels(std::istream& in) {
  SoftLabelTable table;
  std::vector<std::string> problems;

  std::string first;
  std::string rest;
  if (in.peek() == '#') {
    std::getline(in, first);
    auto body = text::trim(std::string_view(first).substr(1));
    constexpr std::string_view kKey = "generated:";
    if (body.starts_with(kKey)) {
      const auto value = text::trim(body.substr(kKey.size()));
      if (value == "out_of_fold") {
        table.provenance = SoftLabelProvenance::kOutOfFold;
      } else if (value == "full_fit") {
        table.provenance = SoftLabelProvenance::kFullFit;
      } else {
        problems.push_back("line 1: unknown provenance '" + std::string(value) + "'");
      }
    }
  }
  const std::size_t offset = first.empty() ? 0 : 1;

  csv::Reader reader(in);
  auto header = reader.next(true);
  if (!header) throw LoadError({"soft-label file is empty"});
  const std::vector<std::string> expected{"doc_id", "p_ele", "p_int", "p_adv"};
  if (header->fields != expected) {
    throw LoadError({"line " + std::to_string(header->line + offset) +
                     ": expected header doc_id,p_ele,p_int,p_adv"});
  }
  std::unordered_set<std::string> seen;
  while (auto rec = reader.next(true)) {
    const std::string where = "line " + std::to_string(rec->line + offset);
    if (rec->fields.size() != 4) {
      problems.push_back(where + ": expected 4 fields");
      continue;
    }
    SoftLabelRow row;
    row.doc_id = rec->fields[0];
    if (row.doc_id.empty()) {
      problems.push_back(where + ": missing doc_id");
      continue;
    }
    bool ok = true;
    double sum = 0.0;
    for (int c = 0; c < 3; ++c) {
      try {
        row.probabilities[c] = io::parse_double(text::trim(rec->fields[c + 1]));
      } catch (const Error&) {
        problems.push_back(where + " (" + row.doc_id + "): bad number '" +
                           rec->fields[c + 1] + "'");
        ok = false;
        break;
      }
      if (!std::isfinite(row.probabilities[c]) || row.probabilities[c] < 0.0) {
        problems.push_back(where + " (" + row.doc_id + "): negative or non-finite probability");
        ok = false;
        break;
      }
      sum += row.probabilities[c];
    }
    if (!ok) continue;
    if (std::fabs(sum - 1.0) > kSimplexTolerance) {
      problems.push_back(where + " (" + row.doc_id + "): probabilities sum to " +
                         io::format_double(sum));
      continue;
    }
    if (!seen.insert(row.doc_id).second) {
      problems.push_back(where + ": duplicate doc_id " + row.doc_id);
      continue;
    }
    table.rows.push_back(std::move(row));
  }
  if (!problems.empty()) throw LoadError(problems);
  return table;
}

SoftLabelTable load_soft_labels(const std::filesystem::path& path) {
  std::istringstream in(io::read_file(path));
  return parse_soft_labels(in);
}

FeatureMatrix fuse(const FeatureMatrix& matrix, const SoftLabelTable& soft) {
  if (matrix.has_group(FeatureGroup::HYBRID)) {
    throw SchemaError("matrix already contains HYBRID columns");
  }
  std::unordered_map<std::string, const SoftLabelRow*> index;
  for (const auto& row : soft.rows) index.emplace(row.doc_id, &row);
  std::vector<std::string> missing;
  for (const auto& row : matrix.rows) {
    if (!index.contains(row.doc_id)) missing.push_back(row.doc_id);
  }
  if (!missing.empty()) {
    throw Error("soft labels missing for: " + text::join(missing, ", "));
  }

  FeatureMatrix out = matrix;
  for (const auto& f : full_schema().features) {
    if (f.group == FeatureGroup::HYBRID) out.schema.features.push_back(f);
  }
  for (auto& row : out.rows) {
    const auto* s = index.at(row.doc_id);
    for (double p : s->probabilities) {
      row.values.push_back(p);
      row.absent.push_back(0);
    }
  }
  return out;
}

}  // namespace tura
