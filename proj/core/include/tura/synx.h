#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tura/config.h"
#include "tura/corpus.h"

namespace tura {

// The 37 universal dependency relations. Subtypes (`nmod:poss`) fold onto
// their base label; anything else lands in the trailing "other" bucket.
inline constexpr std::size_t kNumUdRelations = 37;
inline constexpr std::array<std::string_view, kNumUdRelations> kUdRelations = {
    "acl",      "advcl",     "advmod",     "amod",  "appos",    "aux",
    "case",     "cc",        "ccomp",      "clf",   "compound", "conj",
    "cop",      "csubj",     "dep",        "det",   "discourse", "dislocated",
    "expl",     "fixed",     "flat",       "goeswith", "iobj",  "list",
    "mark",     "nmod",      "nsubj",      "nummod", "obj",     "obl",
    "orphan",   "parataxis", "punct",      "reparandum", "root", "vocative",
    "xcomp"};
inline constexpr std::size_t kNumDepBuckets = kNumUdRelations + 1;
inline constexpr std::size_t kOtherRelation = kNumUdRelations;

std::string_view base_relation(std::string_view deprel);
// Bucket index in [0, kNumDepBuckets).
std::size_t relation_bucket(std::string_view deprel);

struct DepthSummary {
  double mean = 0.0;
  double max = 0.0;
  bool absent = false;
};

// Arc distance from the deepest token to the root (root token = 0).
int dependency_depth(const Sentence& sentence);

DepthSummary dependency_depths(const Document& document);
// Only sentences carrying a tree contribute; absent when none do.
DepthSummary constituency_depths(const Document& document);

enum class PhraseSource { kDependency, kConstituency, kMixed };
std::string_view to_string(PhraseSource source);

struct PhraseFeatures {
  double np_per_sentence = 0.0;
  double vp_per_sentence = 0.0;
  double np_per_word = 0.0;
  double vp_per_word = 0.0;
  double mean_np_len = 0.0;
  PhraseSource source = PhraseSource::kDependency;
};

struct PhraseCounts {
  std::size_t np = 0;
  std::size_t vp = 0;
  std::size_t np_tokens = 0;
};

// Dependency fallback: an NP is the subtree of a NOUN/PROPN/PRON token that
// has no nominal ancestor (so NPs never nest); VPs likewise for VERB.
PhraseCounts dependency_phrases(const Sentence& sentence);
// Constituency: nodes whose label is listed; NP length = leaves below it.
PhraseCounts constituency_phrases(const ConstituencyNode& tree,
                                  const std::vector<std::string>& np_labels,
                                  const std::vector<std::string>& vp_labels);

// Uses each sentence's tree when present, the dependency fallback otherwise.
PhraseFeatures phrase_features(const Document& document,
                               const std::vector<std::string>& np_labels = {"NP"},
                               const std::vector<std::string>& vp_labels = {"VP"});

// Proportion of all tokens per relation bucket; sums to 1.
std::array<double, kNumDepBuckets> dependency_distribution(const Document& document);
// Proportion of all tokens (punctuation included) per UPOS tag; sums to 1.
std::array<double, kNumUpos> pos_distribution(const Document& document);

struct SynxFeatures {
  PhraseFeatures phrases;
  std::array<double, kNumDepBuckets> dep_prop{};
  DepthSummary dep_depth;
  DepthSummary const_depth;
  std::array<double, kNumUpos> pos_prop{};
};

SynxFeatures extract_synx(const Document& document, const FeatureConfig& config = {});

}  // namespace tura
