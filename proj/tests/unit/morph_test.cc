#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "builders.h"
#include "oracles.h"
#include "tura/morph.h"
#include "tura/random.h"

using namespace tura;
using testing::tok;

TEST_CASE("exponent is the suffix after the common prefix with the lemma") {
  CHECK(extract_exponent("evlerde", "ev") == "lerde");
  CHECK(extract_exponent("ev", "ev") == kEmptyExponent);
  CHECK(extract_exponent("Kitabı", "kitap") == "bı");
  CHECK(extract_exponent("İstanbul'da", "İstanbul") == "'da");
  CHECK(extract_exponent("ağaçlar", "ağaç") == "lar");
  CHECK(extract_exponent("gitti", "git") == "ti");
}

TEST_CASE("mci edge cases") {
  MciParams p;
  p.sample_size = 3;
  const std::vector<std::string> empty;
  CHECK(mci(empty, p).absent);
  const std::vector<std::string> same(8, "lar");
  CHECK(mci(same, p).value == 0.0);
  const std::vector<std::string> two{"a", "b"};
  p.with_replacement = false;
  const auto r = mci(two, p);
  CHECK(r.fell_back);
  p.with_replacement = true;
  CHECK_FALSE(mci(two, p).fell_back);
}

TEST_CASE("mci without replacement on all-distinct exponents is exact") {
  const std::vector<std::string> inv{"a", "b", "c", "d", "e"};
  MciParams p;
  p.sample_size = 4;
  p.samples = 10;
  p.with_replacement = false;
  CHECK(mci(inv, p).value == 3.0);
}

TEST_CASE("monte carlo mci matches enumeration for K = 2") {
  Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inv = oracles::random_inventory(rng, 2 + rng.uniform_index(5));
    for (bool replacement : {true, false}) {
      MciParams p;
      p.sample_size = 2;
      p.samples = 10000;
      p.with_replacement = replacement;
      p.seed = rng.next();
      CHECK(std::fabs(mci(inv, p).value - oracles::mci_expectation(inv, 2, replacement)) <= 0.05);
    }
  }
}

TEST_CASE("mci is bounded and ignores inventory order") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    auto inv = oracles::random_inventory(rng, 1 + rng.uniform_index(30));
    MciParams p;
    p.sample_size = 2 + static_cast<int>(rng.uniform_index(9));
    p.samples = 50;
    p.with_replacement = rng.uniform_index(2) == 0;
    p.seed = rng.next();
    const auto a = mci(inv, p);
    CHECK(a.value >= 0.0);
    CHECK(a.value <= p.sample_size - 1);
    rng.shuffle(std::span<std::string>(inv));
    CHECK(mci(inv, p).value == a.value);
  }
}

TEST_CASE("document morph features are seeded per document") {
  Sentence s;
  s.tokens = {tok("evlerde", "ev", Upos::NOUN, 3, "obl"), tok("evi", "ev", Upos::NOUN, 3, "obj"),
              tok("gördüm", "gör", Upos::VERB, 0, "root")};
  auto a = testing::make_doc("a", ReadingLevel::kElementary, {s, s, s});
  const auto f1 = extract_morph(a, 2, 50, 1);
  const auto f2 = extract_morph(a, 2, 50, 1);
  for (std::size_t i = 0; i < 6; ++i) CHECK(f1.values[i].value == f2.values[i].value);
  CHECK(f1.values[4].absent);  // no adjectives
  CHECK(f1.values[5].absent);
  CHECK_FALSE(f1.values[2].fell_back);  // three verbs, K = 2
  CHECK(f1.values[2].value == 0.0);     // one verb exponent
  const auto inv = exponent_inventory(a, Upos::NOUN);
  CHECK(inv.exponents.size() == 6);
}
