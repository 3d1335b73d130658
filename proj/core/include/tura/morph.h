#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tura/corpus.h"

namespace tura {

// Marker for a word form identical to its lemma.
inline constexpr std::string_view kEmptyExponent = "\xE2\x88\x85";  // ∅

// Suffix of the lowercased surface left after removing its longest common
// prefix (in code points) with the lowercased lemma.
std::string extract_exponent(std::string_view surface, std::string_view lemma);

struct ExponentInventory {
  Upos pos = Upos::NOUN;
  std::vector<std::string> exponents;  // document order, duplicates kept
};

ExponentInventory exponent_inventory(const Document& document, Upos pos);

struct MciParams {
  int sample_size = 10;  // K
  int samples = 100;     // S
  bool with_replacement = true;
  std::uint64_t seed = 0;
};

struct MciResult {
  double value = 0.0;
  bool absent = false;     // empty inventory
  bool fell_back = false;  // fewer than K tokens, sampled with replacement
};

// Mean over S random samples of K exponents of (distinct exponents - 1).
// Sampling runs over the sorted multiset; the result is independent of
// inventory order.
MciResult mci(std::span<const std::string> exponents, const MciParams& params);

struct MorphFeatures {
  // noun, verb, adj, each with replacement then without.
  std::array<MciResult, 6> values;
};

inline constexpr std::array<std::string_view, 6> kMorphFeatureNames = {
    "mci_noun_rep", "mci_noun_norep", "mci_verb_rep",
    "mci_verb_norep", "mci_adj_rep",  "mci_adj_norep"};

// Seeds derive from document_seed(base_seed, doc_id) and the feature slot.
MorphFeatures extract_morph(const Document& document, int sample_size, int samples,
                            std::uint64_t base_seed);

}  // namespace tura
