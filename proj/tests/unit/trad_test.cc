#include <doctest.h>

#include <cmath>

#include "builders.h"
#include "tura/errors.h"
#include "tura/random.h"
#include "tura/trad.h"

using namespace tura;
using testing::tok;

TEST_CASE("atesman and cetinkaya-uzun reference values") {
  CHECK(std::fabs(atesman(2.5, 5.0) - 85.3375) < 1e-9);
  CHECK(std::fabs(cetinkaya_uzun(2.5, 5.0) - 49.0005) < 1e-9);
  CHECK(std::fabs(atesman(1.0, 1.0) - 156.04) < 1e-9);
  CHECK(std::fabs(cetinkaya_uzun(1.0, 1.0) - 91.865) < 1e-9);
}

TEST_CASE("formulas decrease in both arguments") {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double s = 1.0 + 4.0 * rng.uniform_real();
    const double w = 1.0 + 30.0 * rng.uniform_real();
    const double ds = 0.01 + rng.uniform_real();
    const double dw = 0.01 + rng.uniform_real();
    CHECK(atesman(s + ds, w) < atesman(s, w));
    CHECK(atesman(s, w + dw) < atesman(s, w));
    CHECK(cetinkaya_uzun(s + ds, w) < cetinkaya_uzun(s, w));
    CHECK(cetinkaya_uzun(s, w + dw) < cetinkaya_uzun(s, w));
  }
}

TEST_CASE("non-positive means are degenerate") {
  CHECK_THROWS_AS(atesman(0.0, 5.0), DegenerateInputError);
  CHECK_THROWS_AS(cetinkaya_uzun(2.0, 0.0), DegenerateInputError);
}

TEST_CASE("extract_trad on a hand-checked document") {
  // Sentence 1: "Ali okula gitti ." -> 3 words, syllables 2 + 3 + 2 = 7
  // Sentence 2: "Öğretmenlerimiz çok sevindiler ." -> 3 words, 6 + 1 + 4 = 11
  Sentence s1, s2;
  s1.tokens = {tok("Ali", "Ali", Upos::PROPN, 3, "nsubj"), tok("okula", "okul", Upos::NOUN, 3, "obl"),
               tok("gitti", "git", Upos::VERB, 0, "root"), tok(".", ".", Upos::PUNCT, 3, "punct")};
  s2.tokens = {tok("Öğretmenlerimiz", "öğretmen", Upos::NOUN, 3, "nsubj"),
               tok("çok", "çok", Upos::ADV, 3, "advmod"),
               tok("sevindiler", "sevin", Upos::VERB, 0, "root"),
               tok(".", ".", Upos::PUNCT, 3, "punct")};
  const auto d = testing::make_doc("d", ReadingLevel::kElementary, {s1, s2});
  const auto f = extract_trad(d);
  CHECK(f.mean_sentence_len_words == doctest::Approx(3.0));
  CHECK(f.mean_word_len_syllables == doctest::Approx(3.0));
  CHECK(f.poly3_per100w == doctest::Approx(100.0 / 6.0));
  CHECK(f.poly4_per100w == doctest::Approx(100.0 / 6.0));
  CHECK(f.poly5plus_per100w == doctest::Approx(100.0 / 6.0));
  CHECK(f.atesman_score == doctest::Approx(198.825 - 40.175 * 3.0 - 2.610 * 3.0));
  CHECK(f.cetinkaya_score == doctest::Approx(118.823 - 25.987 * 3.0 - 0.971 * 3.0));
}

TEST_CASE("configured coefficients are used") {
  Sentence s;
  s.tokens = {tok("ev", "ev", Upos::NOUN, 0, "root")};
  FeatureConfig c;
  c.atesman = {100.0, 10.0, 1.0};
  const auto f = extract_trad(testing::make_doc("d", ReadingLevel::kElementary, {s}), c);
  CHECK(f.atesman_score == doctest::Approx(89.0));
}

TEST_CASE("punctuation-only documents are degenerate") {
  Sentence s;
  s.tokens = {tok(".", ".", Upos::PUNCT, 0, "root")};
  CHECK_THROWS_AS(extract_trad(testing::make_doc("p", ReadingLevel::kElementary, {s})),
                  DegenerateInputError);
}
