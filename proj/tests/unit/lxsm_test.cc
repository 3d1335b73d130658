#include <doctest.h>

#include <cmath>
#include <set>

#include "builders.h"
#include "oracles.h"
#include "tura/errors.h"
#include "tura/lexicon.h"
#include "tura/lxsm.h"
#include "tura/random.h"

using namespace tura;
using testing::tok;

namespace {

Document lexical_doc() {
  Sentence s1, s2;
  s1.tokens = {tok("Kitaplar", "kitap", Upos::NOUN, 3, "nsubj"),
               tok("güzel", "güzel", Upos::ADJ, 3, "amod"),
               tok("okudum", "oku", Upos::VERB, 0, "root"), tok(".", ".", Upos::PUNCT, 3, "punct")};
  s2.tokens = {tok("kitabı", "kitap", Upos::NOUN, 2, "obj"),
               tok("okudum", "oku", Upos::VERB, 0, "root"), tok("ve", "ve", Upos::CCONJ, 2, "cc")};
  return testing::make_doc("lx", ReadingLevel::kElementary, {s1, s2});
}

}  // namespace

TEST_CASE("ttr family closed forms") {
  const auto f = ttr_family(3, 4);
  CHECK(f.ttr == doctest::Approx(0.75));
  CHECK(f.root_ttr == doctest::Approx(1.5));
  CHECK(f.corrected_ttr == doctest::Approx(1.0606601717798212));
  CHECK(f.bilog_ttr == doctest::Approx(0.7924812503605781));
  CHECK(f.uber_index == doctest::Approx(6.680333047151994));
}

TEST_CASE("ttr family sentinels") {
  CHECK(ttr_family(1, 1).bilog_ttr == 0.0);
  CHECK(ttr_family(1, 5).bilog_ttr == 0.0);
  CHECK(ttr_family(5, 5).uber_index == 0.0);
  CHECK(ttr_family(5, 5).ttr == 1.0);
  CHECK_THROWS_AS(ttr_family(0, 0), Error);
  CHECK_THROWS_AS(ttr_family(3, 2), Error);
}

TEST_CASE("mattr worked example") {
  const std::vector<std::string> t{"a", "b", "a", "b", "c"};
  CHECK(mattr(t, 3) == doctest::Approx(7.0 / 9.0));
  CHECK(mattr(t, 5) == doctest::Approx(0.6));
  CHECK(mattr(t, 50) == doctest::Approx(0.6));
  CHECK(mattr(t, 1) == 1.0);
  CHECK_THROWS_AS(mattr(t, 0), Error);
}

TEST_CASE("mattr equals window enumeration exactly") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.uniform_index(200);
    const std::size_t vocab = 1 + rng.uniform_index(30);
    std::vector<std::string> tokens;
    for (std::size_t i = 0; i < n; ++i) tokens.push_back("w" + std::to_string(rng.uniform_index(vocab)));
    const std::size_t w = 1 + rng.uniform_index(n);
    CHECK(mattr(tokens, w) == oracles::mattr(tokens, w));
  }
}

TEST_CASE("mattr with a window at least the text length is plain ttr") {
  const std::vector<std::string> t{"x", "y", "x"};
  CHECK(mattr(t, 3) == doctest::Approx(2.0 / 3.0));
  CHECK(mattr(t, 10) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("lexical variation counts distinct lemmas per category") {
  const auto v = lexical_variation(lexical_doc());
  CHECK(v.noun_var == doctest::Approx(0.5));
  CHECK(v.verb_var == doctest::Approx(0.5));
  CHECK(v.adj_var == doctest::Approx(1.0));
  CHECK(v.adv_var == 0.0);
  CHECK(v.lexical_density == doctest::Approx(5.0 / 6.0));
}

TEST_CASE("psycholinguistic frequency uses log10(freq + 1)") {
  Lexicon early("early"), late("late");
  early.add("kitap", 10);
  early.add("oku", 100);
  late.add("güzel", 1000);
  const auto f = psycholinguistic_frequency(lexical_doc(), early, late);
  const double e_total = 2 * std::log10(11.0) + 2 * std::log10(101.0);
  const double l_total = std::log10(1001.0);
  CHECK(f.early_freq_per_word == doctest::Approx(e_total / 6.0));
  CHECK(f.late_freq_per_word == doctest::Approx(l_total / 6.0));
  CHECK(f.early_freq_per_sentence == doctest::Approx(e_total / 2.0));
  CHECK(f.late_freq_per_sentence == doctest::Approx(l_total / 2.0));
  CHECK(f.child_corpus_proportion == doctest::Approx(4.0 / 6.0));
}

TEST_CASE("familiarity is computed over distinct lemmas") {
  Lexicon basic("basic");
  basic.add("kitap", 1);
  basic.add("ve", 1);
  // Distinct lemmas: kitap, güzel, oku, ve.
  CHECK(familiarity_pct(lexical_doc(), basic) == doctest::Approx(50.0));
}

TEST_CASE("lexicon normalizes case and rejects duplicates") {
  Lexicon lex("l");
  lex.add("Işık", 5);
  CHECK(lex.contains("ışık"));
  CHECK(lex.frequency("IŞIK") == 5);
  CHECK(lex.frequency("yok") == 0);
  CHECK_THROWS_AS(lex.add("ışık", 2), Error);
  CHECK_THROWS_AS(lex.add("eksi", -1), Error);
}

TEST_CASE("missing lexicon configuration is a config error") {
  CHECK_THROWS_AS(LxsmResources::load(FeatureConfig{}), ConfigError);
}

TEST_CASE("normalized word forms drop punctuation and lowercase") {
  const auto forms = normalized_word_forms(lexical_doc());
  CHECK(forms == std::vector<std::string>{"kitaplar", "güzel", "okudum", "kitabı", "okudum", "ve"});
}
