#include "tura/manifest.h"

#include <fstream>
#include <set>

#include "tura/csv.h"
#include "tura/errors.h"
#include "tura/text.h"

namespace tura {

namespace fs = std::filesystem;

CorpusManifest read_manifest(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw LoadError({"cannot open manifest " + path.string()});
  csv::Reader reader(in);

  const auto header = reader.next();
  const std::vector<std::string> expected = {"doc_id", "level", "conllu_path",
                                             "trees_path"};
  if (!header) throw LoadError({"manifest " + path.string() + " is empty"});
  std::vector<std::string> cols;
  for (const auto& f : header->fields) cols.emplace_back(text::trim(f));
  if (cols != expected) {
    throw LoadError({"manifest header must be doc_id,level,conllu_path,trees_path"});
  }

  const fs::path base = path.parent_path();
  CorpusManifest manifest;
  std::vector<std::string> problems;
  std::set<std::string> seen;
  while (auto record = reader.next()) {
    const std::string where = "row at line " + std::to_string(record->line);
    auto& f = record->fields;
    if (f.size() == 3) f.emplace_back();
    if (f.size() != 4) {
      problems.push_back(where + ": expected 4 fields, found " +
                         std::to_string(f.size()));
      continue;
    }
    ManifestRow row;
    row.doc_id = std::string(text::trim(f[0]));
    const std::string level(text::trim(f[1]));
    if (row.doc_id.empty()) problems.push_back(where + ": empty doc_id");
    if (!seen.insert(row.doc_id).second) {
      problems.push_back(where + ": duplicate doc_id: " + row.doc_id);
    }
    if (const auto parsed = parse_level(level)) {
      row.level = *parsed;
    } else {
      problems.push_back(where + ": unknown level: " + level);
    }
    const auto resolve = [&](std::string_view p) {
      fs::path q{std::string(text::trim(p))};
      return q.is_absolute() ? q : base / q;
    };
    row.conllu_path = resolve(f[2]);
    if (!fs::is_regular_file(row.conllu_path)) {
      problems.push_back(where + ": unreadable file " + row.conllu_path.string());
    }
    if (!text::trim(f[3]).empty()) {
      row.trees_path = resolve(f[3]);
      if (!fs::is_regular_file(*row.trees_path)) {
        problems.push_back(where + ": unreadable file " +
                           row.trees_path->string());
      }
    }
    manifest.rows.push_back(std::move(row));
  }
  if (!problems.empty()) throw LoadError(std::move(problems));
  if (manifest.rows.empty()) {
    throw LoadError({"manifest " + path.string() + " has no rows"});
  }
  return manifest;
}

Document load_document(const ManifestRow& row) {
  Document doc;
  doc.doc_id = row.doc_id;
  doc.level = row.level;
  std::ifstream in(row.conllu_path);
  if (!in) throw Error("cannot open " + row.conllu_path.string());
  doc.sentences = parse_conllu(in);
  if (row.trees_path) {
    std::ifstream trees(*row.trees_path);
    if (!trees) throw Error("cannot open " + row.trees_path->string());
    attach_trees(doc.sentences, trees);
  }
  validate_document(doc);
  return doc;
}

LoadedCorpus load_manifest(const fs::path& path) {
  LoadedCorpus corpus;
  corpus.manifest = read_manifest(path);
  std::vector<std::string> problems;
  for (const auto& row : corpus.manifest.rows) {
    try {
      corpus.documents.push_back(load_document(row));
      ++corpus.level_counts[ordinal(row.level)];
    } catch (const Error& e) {
      problems.push_back(row.doc_id + ": " + e.what());
    }
  }
  if (!problems.empty()) throw LoadError(std::move(problems));
  return corpus;
}

}  // namespace tura
