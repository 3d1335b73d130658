#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tura/corpus.h"
#include "tura/features.h"

// Generator for synthetic annotated corpora with controllable per-group
// signal. Each linguistic group has one generation knob that moves only that
// group's features:
//
//   TRAD   syllables per word
//   LXSM   lemma pool (lexicon frequency and familiarity)
//   SYNX   dependency shape
//   MORPH  number of distinct suffixes
//   DISCO  number and length of tagged entity mentions
//
// A group listed in a document's `signal` set takes the value tied to the
// document's level; every other group takes a neutral value shared by all
// levels.
namespace tura::synthetic {

struct DocumentPlan {
  std::string doc_id;
  ReadingLevel level = ReadingLevel::kElementary;
  GroupSet signal;
};

struct Options {
  std::uint64_t seed = 1;
  int sentences = 8;
  bool trees = false;
};

// `per_level` documents for each level, every group carrying signal.
std::vector<DocumentPlan> separable_plan(int per_level);

// Five strata, one per linguistic group in TRAD, LXSM, SYNX, MORPH, DISCO
// order. In each stratum only that group carries signal, and levels occur
// in a 2:1:1 ELE:INT:ADV ratio (`unit` INT documents per stratum).
std::vector<DocumentPlan> ablation_plan(int unit);

Document generate_document(const DocumentPlan& plan, const Options& options);
std::vector<Document> generate(const std::vector<DocumentPlan>& plans, const Options& options);

// Lexicon files in the formats read by LxsmResources.
std::string early_lexicon_tsv();
std::string late_lexicon_tsv();
std::string basic_words_txt();

// Writes docs/<doc_id>.conllu (plus .trees when requested), the three
// lexicons, config.json and manifest.csv under `dir`.
void write_corpus(const std::filesystem::path& dir, const std::vector<DocumentPlan>& plans,
                  const Options& options);

}  // namespace tura::synthetic
