#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tura/corpus.h"

namespace tura {

struct EntityMention {
  std::size_t sentence = 0;
  std::size_t begin = 0;  // token offsets within the sentence, [begin, end)
  std::size_t end = 0;
  std::string type;
  std::string surface;  // lowercased, tokens joined by single spaces
};

// BIO decoding. An I- tag that does not continue a mention of the same type
// opens a new one.
std::vector<EntityMention> entity_mentions(const Document& document);

struct DiscoFeatures {
  double entities_per_sentence = 0.0;
  double entities_per100w = 0.0;
  double unique_entity_ratio = 0.0;
  double entity_token_proportion = 0.0;
};

DiscoFeatures extract_disco(const Document& document);

}  // namespace tura
