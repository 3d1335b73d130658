#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tura/corpus.h"

namespace tura {

struct ManifestRow {
  std::string doc_id;
  ReadingLevel level = ReadingLevel::kElementary;
  std::filesystem::path conllu_path;
  std::optional<std::filesystem::path> trees_path;
};

struct CorpusManifest {
  std::vector<ManifestRow> rows;
};

struct LoadedCorpus {
  CorpusManifest manifest;
  std::vector<Document> documents;
  std::array<std::size_t, kNumLevels> level_counts{};
};

// CSV with header `doc_id,level,conllu_path,trees_path`. Relative paths are
// resolved against the manifest's directory. All problems are collected and
// thrown together as one LoadError.
CorpusManifest read_manifest(const std::filesystem::path& path);
LoadedCorpus load_manifest(const std::filesystem::path& path);

Document load_document(const ManifestRow& row);

}  // namespace tura
