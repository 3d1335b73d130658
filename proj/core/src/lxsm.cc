#include "tura/lxsm.h"

#include <cmath>
#include <set>
#include <unordered_map>

#include "tura/errors.h"
#include "tura/text.h"

namespace tura {

TtrFamily ttr_family(std::size_t types, std::size_t tokens) {
  if (tokens == 0 || types == 0 || types > tokens) {
    throw Error("ttr_family requires 1 <= types <= tokens");
  }
  const double t = static_cast<double>(types);
  const double n = static_cast<double>(tokens);
  TtrFamily f;
  f.ttr = t / n;
  f.root_ttr = t / std::sqrt(n);
  f.corrected_ttr = t / std::sqrt(2.0 * n);
  if (types > 1 && tokens > 1) f.bilog_ttr = std::log(t) / std::log(n);
  if (types < tokens) {
    const double log_n = std::log(n);
    f.uber_index = log_n * log_n / (log_n - std::log(t));
  }
  return f;
}

double mattr(std::span<const std::string> tokens, std::size_t window) {
  if (tokens.empty()) throw DegenerateInputError("", "mattr of an empty text");
  if (window == 0) throw Error("mattr window must be >= 1");
  const std::size_t n = tokens.size();
  if (n <= window) {
    const std::set<std::string_view> types(tokens.begin(), tokens.end());
    return static_cast<double>(types.size()) / static_cast<double>(n);
  }
  std::unordered_map<std::string_view, std::size_t> counts;
  for (std::size_t i = 0; i < window; ++i) ++counts[tokens[i]];
  std::uint64_t total_types = counts.size();
  for (std::size_t i = window; i < n; ++i) {
    auto out = counts.find(tokens[i - window]);
    if (--out->second == 0) counts.erase(out);
    ++counts[tokens[i]];
    total_types += counts.size();
  }
  const std::uint64_t windows = n - window + 1;
  return static_cast<double>(total_types) /
         (static_cast<double>(window) * static_cast<double>(windows));
}

LexicalVariation lexical_variation(const Document& document) {
  const auto words = word_tokens(document);
  if (words.empty()) throw DegenerateInputError(document.doc_id, "no word tokens");

  struct Category {
    std::set<std::string> lemmas;
    std::size_t tokens = 0;
    double ratio() const {
      return tokens == 0 ? 0.0 : static_cast<double>(lemmas.size()) / tokens;
    }
  };
  Category noun, verb, adj, adv;
  std::size_t content = 0;
  for (const Token* w : words) {
    Category* cat = nullptr;
    switch (w->upos) {
      case Upos::NOUN: cat = &noun; break;
      case Upos::VERB: cat = &verb; break;
      case Upos::ADJ: cat = &adj; break;
      case Upos::ADV: cat = &adv; break;
      default: break;
    }
    if (cat != nullptr) {
      cat->lemmas.insert(text::turkish_lower(w->lemma));
      ++cat->tokens;
    }
    if (w->upos == Upos::NOUN || w->upos == Upos::PROPN || w->upos == Upos::VERB ||
        w->upos == Upos::ADJ || w->upos == Upos::ADV) {
      ++content;
    }
  }
  LexicalVariation v;
  v.noun_var = noun.ratio();
  v.verb_var = verb.ratio();
  v.adj_var = adj.ratio();
  v.adv_var = adv.ratio();
  v.lexical_density = static_cast<double>(content) / words.size();
  return v;
}

PsycholinguisticFrequency psycholinguistic_frequency(const Document& document,
                                                     const Lexicon& early,
                                                     const Lexicon& late) {
  PsycholinguisticFrequency f;
  std::size_t num_words = 0;
  std::size_t in_early = 0;
  double early_total = 0.0;
  double late_total = 0.0;
  for (const auto& sentence : document.sentences) {
    for (const Token* w : word_tokens(sentence)) {
      const double e = std::log10(early.frequency(w->lemma) + 1.0);
      const double l = std::log10(late.frequency(w->lemma) + 1.0);
      early_total += e;
      late_total += l;
      if (early.contains(w->lemma)) ++in_early;
      ++num_words;
    }
  }
  if (num_words > 0) {
    f.early_freq_per_word = early_total / num_words;
    f.late_freq_per_word = late_total / num_words;
    f.child_corpus_proportion = static_cast<double>(in_early) / num_words;
  }
  // Mean over sentences of the per-sentence sums.
  if (!document.sentences.empty()) {
    f.early_freq_per_sentence = early_total / document.sentences.size();
    f.late_freq_per_sentence = late_total / document.sentences.size();
  }
  return f;
}

double familiarity_pct(const Document& document, const Lexicon& basic_words) {
  std::set<std::string> lemmas;
  for (const Token* w : word_tokens(document)) {
    lemmas.insert(text::turkish_lower(w->lemma));
  }
  if (lemmas.empty()) throw DegenerateInputError(document.doc_id, "no word tokens");
  std::size_t known = 0;
  for (const auto& lemma : lemmas) {
    if (basic_words.contains(lemma)) ++known;
  }
  return 100.0 * static_cast<double>(known) / static_cast<double>(lemmas.size());
}

LxsmResources LxsmResources::load(const FeatureConfig& config) {
  const auto require = [](const std::optional<std::filesystem::path>& p,
                          const char* key) -> const std::filesystem::path& {
    if (!p) throw ConfigError(std::string("LXSM features need lexicons.") + key);
    return *p;
  };
  LxsmResources r;
  r.early = load_frequency_lexicon(require(config.early_lexicon, "early"));
  r.late = load_frequency_lexicon(require(config.late_lexicon, "late"));
  r.basic_words = load_word_list(require(config.basic_words, "basic_words"));
  return r;
}

std::vector<std::string> normalized_word_forms(const Document& document) {
  std::vector<std::string> forms;
  for (const Token* w : word_tokens(document)) {
    forms.push_back(text::turkish_lower(w->surface));
  }
  return forms;
}

LxsmFeatures extract_lxsm(const Document& document, const LxsmResources& resources,
                          std::size_t mattr_window) {
  const auto forms = normalized_word_forms(document);
  if (forms.empty()) throw DegenerateInputError(document.doc_id, "no word tokens");
  const std::set<std::string_view> types(forms.begin(), forms.end());

  LxsmFeatures f;
  f.ttr = ttr_family(types.size(), forms.size());
  f.mattr = mattr(forms, mattr_window);
  f.variation = lexical_variation(document);
  f.frequency = psycholinguistic_frequency(document, resources.early, resources.late);
  f.familiarity_pct = familiarity_pct(document, resources.basic_words);
  return f;
}

}  // namespace tura
