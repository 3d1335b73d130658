#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tura/config.h"
#include "tura/corpus.h"
#include "tura/lexicon.h"

namespace tura {

struct TtrFamily {
  double ttr = 0.0;
  double root_ttr = 0.0;
  double corrected_ttr = 0.0;
  double bilog_ttr = 0.0;   // 0 when N == 1 or T == 1
  double uber_index = 0.0;  // 0 when T == N
};

// Requires 1 <= types <= tokens.
TtrFamily ttr_family(std::size_t types, std::size_t tokens);

// Moving-average TTR: mean type count over every window of `window` tokens,
// divided by the window size. Falls back to plain TTR when the text is not
// longer than one window.
double mattr(std::span<const std::string> tokens, std::size_t window);

struct LexicalVariation {
  double noun_var = 0.0;
  double verb_var = 0.0;
  double adj_var = 0.0;
  double adv_var = 0.0;
  double lexical_density = 0.0;
};

LexicalVariation lexical_variation(const Document& document);

struct PsycholinguisticFrequency {
  double early_freq_per_word = 0.0;
  double late_freq_per_word = 0.0;
  double early_freq_per_sentence = 0.0;
  double late_freq_per_sentence = 0.0;
  double child_corpus_proportion = 0.0;
};

// Token score = log10(freq(lemma) + 1).
PsycholinguisticFrequency psycholinguistic_frequency(const Document& document,
                                                     const Lexicon& early,
                                                     const Lexicon& late);

// Percentage of distinct lemmas that appear in the basic word list.
double familiarity_pct(const Document& document, const Lexicon& basic_words);

struct LxsmFeatures {
  TtrFamily ttr;
  double mattr = 0.0;
  LexicalVariation variation;
  PsycholinguisticFrequency frequency;
  double familiarity_pct = 0.0;
};

struct LxsmResources {
  Lexicon early;
  Lexicon late;
  Lexicon basic_words;

  // Throws ConfigError when a lexicon path is not configured and LoadError
  // when a file cannot be read.
  static LxsmResources load(const FeatureConfig& config);
};

// Lowercased surfaces of word tokens, the basis for TTR and MATTR.
std::vector<std::string> normalized_word_forms(const Document& document);

LxsmFeatures extract_lxsm(const Document& document, const LxsmResources& resources,
                          std::size_t mattr_window);

}  // namespace tura
