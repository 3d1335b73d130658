#include "tura/synthetic.h"

#include <array>
#include <cstdio>

#include "tura/csv.h"
#include "tura/errors.h"
#include "tura/io.h"
#include "tura/random.h"

namespace tura::synthetic {
namespace {

constexpr std::string_view kConsonants = "bcdfgklmnprstvyz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::size_t kSyllables = 16 * 5 * 16;
constexpr int kPoolSize = 64;
constexpr int kMaxLemmaSyllables = 4;

enum Pool { kPoolEle = 0, kPoolInt = 1, kPoolAdv = 2, kPoolNeutral = 3, kPoolNames = 4 };

std::string lemma(int pool, int syllables, int index) {
  std::uint64_t space = 1;
  for (int s = 0; s < syllables; ++s) space *= kSyllables;
  std::uint64_t n = static_cast<std::uint64_t>(index) * 5 + pool;
  if (syllables > 1) n = (n * 7919 + 12345) % space;
  std::string out;
  for (int s = 0; s < syllables; ++s) {
    const std::uint64_t digit = n % kSyllables;
    n /= kSyllables;
    out += kConsonants[digit / 80];
    out += kVowels[(digit / 16) % 5];
    out += kConsonants[digit % 16];
  }
  return out;
}

constexpr std::array<std::string_view, 8> kSuffixes = {"de", "da", "ler", "lar",
                                                       "im", "um", "ten", "tan"};
constexpr std::string_view kFixedSuffix = "ye";

struct Knobs {
  int word_syllables = 3;
  int pool = kPoolNeutral;
  int shape = 0;
  int suffixes = 2;
  int mentions = 3;
  bool long_mentions = false;
};

Knobs knobs_for(const DocumentPlan& plan) {
  Knobs k;
  const int lv = ordinal(plan.level);
  if (plan.signal.contains(FeatureGroup::TRAD)) k.word_syllables = std::array{2, 4, 5}[lv];
  if (plan.signal.contains(FeatureGroup::LXSM)) k.pool = lv;
  if (plan.signal.contains(FeatureGroup::SYNX)) k.shape = lv + 1;
  if (plan.signal.contains(FeatureGroup::MORPH)) k.suffixes = std::array{1, 4, 8}[lv];
  if (plan.signal.contains(FeatureGroup::DISCO)) {
    k.mentions = lv == 0 ? 1 : -1;
    k.long_mentions = lv == 2;
  }
  return k;
}

// Tokens: 1 PROPN, 2 NOUN, 3 ADJ, 4 NOUN, 5 ADV, 6 VERB, 7 PUNCT.
constexpr std::array<Upos, 7> kPattern = {Upos::PROPN, Upos::NOUN, Upos::ADJ, Upos::NOUN,
                                          Upos::ADV,   Upos::VERB, Upos::PUNCT};

struct Shape {
  std::array<int, 7> heads;
  std::array<std::string_view, 7> rels;
};

constexpr std::array<Shape, 4> kShapes = {{
    {{2, 6, 4, 6, 6, 0, 6}, {"nmod:poss", "nsubj", "amod", "obj", "advmod", "root", "punct"}},
    {{6, 6, 6, 6, 6, 0, 6}, {"nsubj", "obl", "xcomp", "obj", "advmod", "root", "punct"}},
    {{2, 4, 4, 6, 6, 0, 6}, {"nmod", "nmod", "amod", "obj", "advmod", "root", "punct"}},
    {{2, 3, 4, 5, 6, 0, 6}, {"nmod:poss", "nmod", "amod", "acl", "advmod", "root", "punct"}},
}};

std::string phrase_label(Upos pos) {
  switch (pos) {
    case Upos::NOUN:
    case Upos::PROPN:
      return "NP";
    case Upos::VERB:
      return "VP";
    case Upos::ADJ:
      return "ADJP";
    case Upos::ADV:
      return "ADVP";
    default:
      return "X";
  }
}

ConstituencyNode build_tree(const Sentence& s, int index) {
  const Token& t = s.tokens[index - 1];
  ConstituencyNode pre;
  pre.label = std::string(to_string(t.upos));
  pre.leaf_surface = t.surface;
  if (t.upos == Upos::PUNCT) return pre;
  ConstituencyNode phrase;
  phrase.label = phrase_label(t.upos);
  for (int i = 1; i <= static_cast<int>(s.tokens.size()); ++i) {
    if (i == index) {
      phrase.children.push_back(pre);
    } else if (s.tokens[i - 1].head == index) {
      phrase.children.push_back(build_tree(s, i));
    }
  }
  return phrase;
}

std::string capitalize(std::string word) {
  if (!word.empty()) word[0] = static_cast<char>(word[0] - 'a' + 'A');
  return word;
}

}  // namespace

std::vector<DocumentPlan> separable_plan(int per_level) {
  std::vector<DocumentPlan> plans;
  for (int lv = 0; lv < kNumLevels; ++lv) {
    const auto level = level_from_ordinal(lv);
    for (int i = 1; i <= per_level; ++i) {
      char id[48];
      std::snprintf(id, sizeof(id), "toy_%s_%02d",
                    std::string(level_code(level)).c_str(), i);
      std::string doc_id = id;
      for (auto& c : doc_id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      plans.push_back({doc_id, level, GroupSet::linguistic()});
    }
  }
  return plans;
}

std::vector<DocumentPlan> ablation_plan(int unit) {
  constexpr std::array<FeatureGroup, 5> kOrder = {FeatureGroup::TRAD, FeatureGroup::LXSM,
                                                  FeatureGroup::SYNX, FeatureGroup::MORPH,
                                                  FeatureGroup::DISCO};
  std::vector<DocumentPlan> plans;
  for (std::size_t s = 0; s < kOrder.size(); ++s) {
    for (int lv = 0; lv < kNumLevels; ++lv) {
      const int count = lv == 0 ? 2 * unit : unit;
      for (int i = 1; i <= count; ++i) {
        char id[48];
        std::snprintf(id, sizeof(id), "s%zu_%d_%03d", s, lv, i);
        plans.push_back({id, level_from_ordinal(lv), GroupSet{kOrder[s]}});
      }
    }
  }
  return plans;
}

Document generate_document(const DocumentPlan& plan, const Options& options) {
  if (options.sentences < 1 || options.sentences > kPoolSize / 5) {
    throw ConfigError("sentences must be between 1 and " + std::to_string(kPoolSize / 5));
  }
  const Knobs k = knobs_for(plan);
  Rng rng(document_seed(options.seed, plan.doc_id));
  const int lemma_syllables = k.word_syllables - 1;

  std::vector<int> content(kPoolSize), names(kPoolSize);
  for (int i = 0; i < kPoolSize; ++i) content[i] = names[i] = i;
  rng.shuffle(std::span<int>(content));
  rng.shuffle(std::span<int>(names));

  const int mentions = k.mentions < 0 ? options.sentences : k.mentions;
  std::array<int, 3> morph_counter{};
  std::size_t next_content = 0;

  Document doc;
  doc.doc_id = plan.doc_id;
  doc.level = plan.level;
  const Shape& shape = kShapes[k.shape];
  for (int s = 0; s < options.sentences; ++s) {
    Sentence sentence;
    for (std::size_t t = 0; t < kPattern.size(); ++t) {
      Token tok;
      tok.upos = kPattern[t];
      tok.head = shape.heads[t];
      tok.deprel = std::string(shape.rels[t]);
      if (tok.upos == Upos::PUNCT) {
        tok.surface = tok.lemma = ".";
      } else if (tok.upos == Upos::PROPN) {
        tok.lemma = capitalize(lemma(kPoolNames, lemma_syllables, names[s]));
        tok.surface = tok.lemma + std::string(kFixedSuffix);
      } else {
        tok.lemma = lemma(k.pool, lemma_syllables, content[next_content++]);
        std::string_view suffix = kFixedSuffix;
        const int slot = tok.upos == Upos::NOUN ? 0 : tok.upos == Upos::VERB ? 1
                         : tok.upos == Upos::ADJ ? 2 : -1;
        if (slot >= 0) suffix = kSuffixes[morph_counter[slot]++ % k.suffixes];
        tok.surface = tok.lemma + std::string(suffix);
      }
      sentence.tokens.push_back(std::move(tok));
    }
    if (s < mentions) {
      sentence.tokens[0].entity_tag = "B-PER";
      if (k.long_mentions) sentence.tokens[1].entity_tag = "I-PER";
    }
    if (options.trees) {
      ConstituencyNode root;
      root.label = "S";
      for (int i = 1; i <= static_cast<int>(sentence.tokens.size()); ++i) {
        if (sentence.tokens[i - 1].head == 0) root.children.push_back(build_tree(sentence, i));
      }
      sentence.const_tree = std::move(root);
    }
    doc.sentences.push_back(std::move(sentence));
  }
  return doc;
}

std::vector<Document> generate(const std::vector<DocumentPlan>& plans, const Options& options) {
  std::vector<Document> docs;
  docs.reserve(plans.size());
  for (const auto& p : plans) docs.push_back(generate_document(p, options));
  return docs;
}

namespace {

std::string lexicon_tsv(const std::array<int, 4>& counts) {
  std::string out;
  for (int pool = 0; pool < 4; ++pool) {
    if (counts[pool] == 0) continue;
    for (int syl = 1; syl <= kMaxLemmaSyllables; ++syl) {
      for (int i = 0; i < kPoolSize; ++i) {
        out += lemma(pool, syl, i) + "\t" + std::to_string(counts[pool]) + "\n";
      }
    }
  }
  return out;
}

}  // namespace

std::string early_lexicon_tsv() { return lexicon_tsv({5000, 200, 0, 800}); }
std::string late_lexicon_tsv() { return lexicon_tsv({300, 2000, 100, 700}); }

std::string basic_words_txt() {
  std::string out;
  for (int pool : {kPoolEle, kPoolNeutral}) {
    for (int syl = 1; syl <= kMaxLemmaSyllables; ++syl) {
      for (int i = 0; i < kPoolSize; ++i) out += lemma(pool, syl, i) + "\n";
    }
  }
  return out;
}

void write_corpus(const std::filesystem::path& dir, const std::vector<DocumentPlan>& plans,
                  const Options& options) {
  std::filesystem::create_directories(dir / "docs");
  std::filesystem::create_directories(dir / "lexicons");
  io::write_file_atomic(dir / "lexicons" / "early.tsv", early_lexicon_tsv());
  io::write_file_atomic(dir / "lexicons" / "late.tsv", late_lexicon_tsv());
  io::write_file_atomic(dir / "lexicons" / "basic_words.txt", basic_words_txt());
  io::write_file_atomic(dir / "config.json",
                        "{\n"
                        "  \"lexicons\": {\n"
                        "    \"early\": \"lexicons/early.tsv\",\n"
                        "    \"late\": \"lexicons/late.tsv\",\n"
                        "    \"basic_words\": \"lexicons/basic_words.txt\"\n"
                        "  }\n"
                        "}\n");
  std::string manifest = csv::format_row({"doc_id", "level", "conllu_path", "trees_path"});
  for (const auto& plan : plans) {
    const Document doc = generate_document(plan, options);
    const std::string conllu = "docs/" + doc.doc_id + ".conllu";
    io::write_file_atomic(dir / conllu, write_conllu(doc.sentences));
    std::string trees_path;
    if (options.trees) {
      trees_path = "docs/" + doc.doc_id + ".trees";
      std::string trees;
      for (const auto& s : doc.sentences) {
        if (s.const_tree) trees += write_bracketed_tree(*s.const_tree);
        trees += "\n";
      }
      io::write_file_atomic(dir / trees_path, trees);
    }
    manifest += csv::format_row(
        {doc.doc_id, std::string(level_code(doc.level)), conllu, trees_path});
  }
  io::write_file_atomic(dir / "manifest.csv", manifest);
}

}  // namespace tura::synthetic
