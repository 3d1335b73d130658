#include "tura/synx.h"

#include <algorithm>

#include "tura/errors.h"

namespace tura {

std::string_view base_relation(std::string_view deprel) {
  const auto colon = deprel.find(':');
  return colon == std::string_view::npos ? deprel : deprel.substr(0, colon);
}

std::size_t relation_bucket(std::string_view deprel) {
  const auto base = base_relation(deprel);
  for (std::size_t i = 0; i < kNumUdRelations; ++i) {
    if (kUdRelations[i] == base) return i;
  }
  return kOtherRelation;
}

int dependency_depth(const Sentence& sentence) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<int> depth(n + 1, -1);
  depth[0] = -1;
  int deepest = 0;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (cur != 0 && depth[cur] < 0) {
      path.push_back(cur);
      cur = sentence.tokens[cur - 1].head;
    }
    int d = cur == 0 ? -1 : depth[cur];
    for (auto it = path.rbegin(); it != path.rend(); ++it) depth[*it] = ++d;
    deepest = std::max(deepest, depth[start]);
  }
  return deepest;
}

DepthSummary dependency_depths(const Document& document) {
  DepthSummary s;
  if (document.sentences.empty()) return s;
  double total = 0.0;
  for (const auto& sentence : document.sentences) {
    const int d = dependency_depth(sentence);
    total += d;
    s.max = std::max(s.max, static_cast<double>(d));
  }
  s.mean = total / document.sentences.size();
  return s;
}

DepthSummary constituency_depths(const Document& document) {
  DepthSummary s;
  std::size_t trees = 0;
  double total = 0.0;
  for (const auto& sentence : document.sentences) {
    if (!sentence.const_tree) continue;
    const int d = sentence.const_tree->depth();
    total += d;
    s.max = std::max(s.max, static_cast<double>(d));
    ++trees;
  }
  if (trees == 0) {
    s.absent = true;
    return s;
  }
  s.mean = total / trees;
  return s;
}

std::string_view to_string(PhraseSource source) {
  switch (source) {
    case PhraseSource::kDependency:
      return "dependency";
    case PhraseSource::kConstituency:
      return "constituency";
    case PhraseSource::kMixed:
      return "mixed";
  }
  return "?";
}

namespace {

bool is_nominal(Upos u) {
  return u == Upos::NOUN || u == Upos::PROPN || u == Upos::PRON;
}

// Roots of maximal subtrees: tokens matching `pred` with no matching ancestor.
// Returns the summed subtree sizes through `tokens_covered`.
std::size_t maximal_subtrees(const Sentence& sentence, bool (*pred)(Upos),
                             std::size_t* tokens_covered) {
  const int n = static_cast<int>(sentence.tokens.size());
  std::vector<std::vector<int>> children(n + 1);
  for (int i = 1; i <= n; ++i) children[sentence.tokens[i - 1].head].push_back(i);

  std::size_t count = 0;
  std::size_t covered = 0;
  // Walk from the root; once inside a matching subtree, descendants are
  // counted as covered but never start a new phrase.
  struct Frame {
    int node;
    bool inside;
  };
  std::vector<Frame> stack;
  for (int c : children[0]) stack.push_back({c, false});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    bool inside = f.inside;
    if (!inside && pred(sentence.tokens[f.node - 1].upos)) {
      ++count;
      inside = true;
    }
    if (inside) ++covered;
    for (int c : children[f.node]) stack.push_back({c, inside});
  }
  if (tokens_covered != nullptr) *tokens_covered = covered;
  return count;
}

std::size_t count_leaves(const ConstituencyNode& node) {
  if (node.children.empty()) return 1;
  std::size_t n = 0;
  for (const auto& c : node.children) n += count_leaves(c);
  return n;
}

bool listed(const std::vector<std::string>& labels, const std::string& label) {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

void walk_constituents(const ConstituencyNode& node,
                       const std::vector<std::string>& np_labels,
                       const std::vector<std::string>& vp_labels, PhraseCounts& out) {
  if (listed(np_labels, node.label)) {
    ++out.np;
    out.np_tokens += count_leaves(node);
  }
  if (listed(vp_labels, node.label)) ++out.vp;
  for (const auto& c : node.children) walk_constituents(c, np_labels, vp_labels, out);
}

}  // namespace

PhraseCounts dependency_phrases(const Sentence& sentence) {
  PhraseCounts counts;
  counts.np = maximal_subtrees(sentence, &is_nominal, &counts.np_tokens);
  counts.vp = maximal_subtrees(
      sentence, [](Upos u) { return u == Upos::VERB; }, nullptr);
  return counts;
}

PhraseCounts constituency_phrases(const ConstituencyNode& tree,
                                  const std::vector<std::string>& np_labels,
                                  const std::vector<std::string>& vp_labels) {
  PhraseCounts counts;
  walk_constituents(tree, np_labels, vp_labels, counts);
  return counts;
}

PhraseFeatures phrase_features(const Document& document,
                               const std::vector<std::string>& np_labels,
                               const std::vector<std::string>& vp_labels) {
  PhraseFeatures f;
  PhraseCounts total;
  std::size_t with_tree = 0;
  std::size_t words = 0;
  for (const auto& sentence : document.sentences) {
    words += word_tokens(sentence).size();
    PhraseCounts c;
    if (sentence.const_tree) {
      c = constituency_phrases(*sentence.const_tree, np_labels, vp_labels);
      ++with_tree;
    } else {
      c = dependency_phrases(sentence);
    }
    total.np += c.np;
    total.vp += c.vp;
    total.np_tokens += c.np_tokens;
  }
  const std::size_t sentences = document.sentences.size();
  if (with_tree == 0) {
    f.source = PhraseSource::kDependency;
  } else if (with_tree == sentences) {
    f.source = PhraseSource::kConstituency;
  } else {
    f.source = PhraseSource::kMixed;
  }
  if (sentences > 0) {
    f.np_per_sentence = static_cast<double>(total.np) / sentences;
    f.vp_per_sentence = static_cast<double>(total.vp) / sentences;
  }
  if (words > 0) {
    f.np_per_word = static_cast<double>(total.np) / words;
    f.vp_per_word = static_cast<double>(total.vp) / words;
  }
  if (total.np > 0) f.mean_np_len = static_cast<double>(total.np_tokens) / total.np;
  return f;
}

std::array<double, kNumDepBuckets> dependency_distribution(const Document& document) {
  std::array<std::size_t, kNumDepBuckets> counts{};
  std::size_t total = 0;
  for (const auto& sentence : document.sentences) {
    for (const auto& token : sentence.tokens) {
      ++counts[relation_bucket(token.deprel)];
      ++total;
    }
  }
  if (total == 0) throw DegenerateInputError(document.doc_id, "no tokens");
  std::array<double, kNumDepBuckets> props{};
  for (std::size_t i = 0; i < kNumDepBuckets; ++i) {
    props[i] = static_cast<double>(counts[i]) / total;
  }
  return props;
}

std::array<double, kNumUpos> pos_distribution(const Document& document) {
  std::array<std::size_t, kNumUpos> counts{};
  std::size_t total = 0;
  for (const auto& sentence : document.sentences) {
    for (const auto& token : sentence.tokens) {
      ++counts[static_cast<std::size_t>(token.upos)];
      ++total;
    }
  }
  if (total == 0) throw DegenerateInputError(document.doc_id, "no tokens");
  std::array<double, kNumUpos> props{};
  for (std::size_t i = 0; i < kNumUpos; ++i) {
    props[i] = static_cast<double>(counts[i]) / total;
  }
  return props;
}

SynxFeatures extract_synx(const Document& document, const FeatureConfig& config) {
  SynxFeatures f;
  f.phrases = phrase_features(document, config.np_labels, config.vp_labels);
  f.dep_prop = dependency_distribution(document);
  f.dep_depth = dependency_depths(document);
  f.const_depth = constituency_depths(document);
  f.pos_prop = pos_distribution(document);
  return f;
}

}  // namespace tura
