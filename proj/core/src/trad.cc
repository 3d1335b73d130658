#include "tura/trad.h"

#include "tura/errors.h"

namespace tura {

double linear_readability(const FormulaCoefficients& c,
                          double mean_syllables_per_word,
                          double mean_words_per_sentence) {
  if (!(mean_syllables_per_word > 0) || !(mean_words_per_sentence > 0)) {
    throw DegenerateInputError("", "readability formula needs positive means");
  }
  return c.intercept - c.word_length * mean_syllables_per_word -
         c.sentence_length * mean_words_per_sentence;
}

TradFeatures extract_trad(const Document& document, const FeatureConfig& config) {
  const auto words = word_tokens(document);
  if (words.empty()) {
    throw DegenerateInputError(document.doc_id, "no word tokens");
  }
  std::size_t syllables = 0;
  std::size_t poly3 = 0;
  std::size_t poly4 = 0;
  std::size_t poly5 = 0;
  for (const Token* word : words) {
    const int n = syllable_count(word->surface);
    syllables += n;
    if (n == 3) ++poly3;
    if (n == 4) ++poly4;
    if (n >= 5) ++poly5;
  }
  const double num_words = static_cast<double>(words.size());
  TradFeatures f;
  f.mean_sentence_len_words = num_words / document.sentences.size();
  f.mean_word_len_syllables = syllables / num_words;
  f.poly3_per100w = 100.0 * poly3 / num_words;
  f.poly4_per100w = 100.0 * poly4 / num_words;
  f.poly5plus_per100w = 100.0 * poly5 / num_words;
  f.atesman_score =
      atesman(f.mean_word_len_syllables, f.mean_sentence_len_words, config.atesman);
  f.cetinkaya_score = cetinkaya_uzun(f.mean_word_len_syllables,
                                     f.mean_sentence_len_words, config.cetinkaya);
  return f;
}

}  // namespace tura
