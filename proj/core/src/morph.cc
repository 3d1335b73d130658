#include "tura/morph.h"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "tura/errors.h"
#include "tura/random.h"
#include "tura/text.h"

namespace tura {

std::string extract_exponent(std::string_view surface, std::string_view lemma) {
  const auto form = text::turkish_lower(text::decode_utf8(surface));
  const auto stem = text::turkish_lower(text::decode_utf8(lemma));
  std::size_t lcp = 0;
  while (lcp < form.size() && lcp < stem.size() && form[lcp] == stem[lcp]) ++lcp;
  if (lcp == form.size()) return std::string(kEmptyExponent);
  return text::encode_utf8(std::u32string_view(form).substr(lcp));
}

ExponentInventory exponent_inventory(const Document& document, Upos pos) {
  ExponentInventory inv;
  inv.pos = pos;
  for (const Token* w : word_tokens(document)) {
    if (w->upos == pos) inv.exponents.push_back(extract_exponent(w->surface, w->lemma));
  }
  return inv;
}

MciResult mci(std::span<const std::string> exponents, const MciParams& params) {
  if (params.sample_size < 2) throw Error("mci sample size must be >= 2");
  if (params.samples < 1) throw Error("mci needs at least one sample");
  MciResult result;
  if (exponents.empty()) {
    result.absent = true;
    return result;
  }
  std::vector<std::string_view> pool(exponents.begin(), exponents.end());
  std::sort(pool.begin(), pool.end());

  const auto k = static_cast<std::size_t>(params.sample_size);
  bool with_replacement = params.with_replacement;
  if (!with_replacement && pool.size() < k) {
    with_replacement = true;
    result.fell_back = true;
  }

  Rng rng(params.seed);
  std::vector<std::size_t> order(pool.size());
  std::unordered_set<std::string_view> distinct;
  std::uint64_t total = 0;
  for (int s = 0; s < params.samples; ++s) {
    distinct.clear();
    if (with_replacement) {
      for (std::size_t i = 0; i < k; ++i) distinct.insert(pool[rng.uniform_index(pool.size())]);
    } else {
      // Partial Fisher-Yates: the first k slots become the sample.
      std::iota(order.begin(), order.end(), std::size_t{0});
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + rng.uniform_index(order.size() - i);
        std::swap(order[i], order[j]);
        distinct.insert(pool[order[i]]);
      }
    }
    total += distinct.size() - 1;
  }
  result.value = static_cast<double>(total) / params.samples;
  return result;
}

MorphFeatures extract_morph(const Document& document, int sample_size, int samples,
                            std::uint64_t base_seed) {
  const std::uint64_t doc_seed = document_seed(base_seed, document.doc_id);
  const std::array<Upos, 3> categories = {Upos::NOUN, Upos::VERB, Upos::ADJ};
  MorphFeatures f;
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const auto inventory = exponent_inventory(document, categories[c]);
    for (int mode = 0; mode < 2; ++mode) {
      const std::size_t slot = 2 * c + mode;
      MciParams params;
      params.sample_size = sample_size;
      params.samples = samples;
      params.with_replacement = mode == 0;
      params.seed = splitmix64(doc_seed + slot);
      f.values[slot] = mci(inventory.exponents, params);
    }
  }
  return f;
}

}  // namespace tura
