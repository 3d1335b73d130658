#pragma once

#include "tura/config.h"
#include "tura/corpus.h"

namespace tura {

struct TradFeatures {
  double atesman_score = 0.0;
  double cetinkaya_score = 0.0;
  double mean_sentence_len_words = 0.0;
  double mean_word_len_syllables = 0.0;
  // Words with exactly 3, exactly 4, and 5 or more syllables, per 100 words.
  double poly3_per100w = 0.0;
  double poly4_per100w = 0.0;
  double poly5plus_per100w = 0.0;
};

// Both means must be positive; otherwise DegenerateInputError.
double linear_readability(const FormulaCoefficients& coefficients,
                          double mean_syllables_per_word,
                          double mean_words_per_sentence);

inline double atesman(double mean_syllables_per_word, double mean_words_per_sentence,
                      const FormulaCoefficients& c = kAtesmanCoefficients) {
  return linear_readability(c, mean_syllables_per_word, mean_words_per_sentence);
}

inline double cetinkaya_uzun(double mean_syllables_per_word,
                             double mean_words_per_sentence,
                             const FormulaCoefficients& c = kCetinkayaCoefficients) {
  return linear_readability(c, mean_syllables_per_word, mean_words_per_sentence);
}

TradFeatures extract_trad(const Document& document,
                          const FeatureConfig& config = {});

}  // namespace tura
