#include "tura/disco.h"

#include <set>

#include "tura/errors.h"
#include "tura/text.h"

namespace tura {

namespace {

enum class Bio { kOutside, kBegin, kInside };

Bio split_tag(const std::string& tag, std::string* type) {
  if (tag.empty() || tag == "O" || tag == "_") return Bio::kOutside;
  if (tag.size() > 2 && tag[1] == '-') {
    *type = tag.substr(2);
    switch (tag[0]) {
      case 'B':
      case 'S':
        return Bio::kBegin;
      case 'I':
      case 'E':
        return Bio::kInside;
      default:
        break;
    }
  }
  // A bare type such as "PER" behaves like I-PER.
  *type = tag;
  return Bio::kInside;
}

}  // namespace

std::vector<EntityMention> entity_mentions(const Document& document) {
  std::vector<EntityMention> mentions;
  for (std::size_t s = 0; s < document.sentences.size(); ++s) {
    const auto& tokens = document.sentences[s].tokens;
    bool open = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::string type;
      const Bio bio = split_tag(tokens[i].entity_tag, &type);
      if (bio == Bio::kOutside) {
        open = false;
        continue;
      }
      const std::string lowered = text::turkish_lower(tokens[i].surface);
      if (bio == Bio::kInside && open && mentions.back().type == type) {
        mentions.back().end = i + 1;
        mentions.back().surface += " " + lowered;
        continue;
      }
      mentions.push_back({s, i, i + 1, type, lowered});
      open = true;
    }
  }
  return mentions;
}

DiscoFeatures extract_disco(const Document& document) {
  const std::size_t words = word_tokens(document).size();
  if (words == 0) throw DegenerateInputError(document.doc_id, "no word tokens");
  const auto mentions = entity_mentions(document);

  DiscoFeatures f;
  if (mentions.empty()) return f;
  std::set<std::string> distinct;
  std::size_t covered_words = 0;
  for (const auto& m : mentions) {
    distinct.insert(m.surface);
    const auto& tokens = document.sentences[m.sentence].tokens;
    for (std::size_t i = m.begin; i < m.end; ++i) {
      if (is_word(tokens[i])) ++covered_words;
    }
  }
  const double n = static_cast<double>(mentions.size());
  f.entities_per_sentence = n / document.sentences.size();
  f.entities_per100w = 100.0 * n / words;
  f.unique_entity_ratio = static_cast<double>(distinct.size()) / n;
  f.entity_token_proportion = static_cast<double>(covered_words) / words;
  return f;
}

}  // namespace tura
