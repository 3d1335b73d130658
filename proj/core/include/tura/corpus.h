#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tura {

// The 17 Universal Dependencies part-of-speech tags, in UD's alphabetical
// order. The enumerator value doubles as the feature column offset.
enum class Upos : std::uint8_t {
  ADJ, ADP, ADV, AUX, CCONJ, DET, INTJ, NOUN, NUM,
  PART, PRON, PROPN, PUNCT, SCONJ, SYM, VERB, X,
};
inline constexpr std::size_t kNumUpos = 17;
inline constexpr std::array<std::string_view, kNumUpos> kUposTags = {
    "ADJ",  "ADP",   "ADV",   "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON",  "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X"};

std::optional<Upos> parse_upos(std::string_view tag);
std::string_view to_string(Upos tag);

enum class ReadingLevel : std::uint8_t {
  kElementary = 0,
  kIntermediate = 1,
  kAdvanced = 2,
};
inline constexpr int kNumLevels = 3;

// "ELE" / "INT" / "ADV".
std::string_view level_code(ReadingLevel level);
std::optional<ReadingLevel> parse_level(std::string_view code);
inline int ordinal(ReadingLevel level) { return static_cast<int>(level); }
ReadingLevel level_from_ordinal(int ordinal);

struct Token {
  std::string surface;
  std::string lemma;
  Upos upos = Upos::X;
  int head = 0;  // 0 = sentence root, otherwise 1-based token index
  std::string deprel;
  std::string entity_tag = "O";

  bool operator==(const Token&) const = default;
};

// A node carries either children or a leaf surface, never both.
struct ConstituencyNode {
  std::string label;
  std::vector<ConstituencyNode> children;
  std::optional<std::string> leaf_surface;

  // Longest root-to-leaf path counted in labelled nodes; a preterminal has
  // depth 1.
  int depth() const;
  bool operator==(const ConstituencyNode&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::optional<ConstituencyNode> const_tree;

  bool operator==(const Sentence&) const = default;
};

struct Document {
  std::string doc_id;
  ReadingLevel level = ReadingLevel::kElementary;
  std::vector<Sentence> sentences;
};

// CoNLL-U. Entity tags are read from MISC `NE=<BIO>`; multiword ranges and
// empty nodes are skipped. Throws ParseError naming the offending line.
std::vector<Sentence> parse_conllu(std::istream& in);
std::vector<Sentence> parse_conllu(std::string_view text);
std::string write_conllu(const std::vector<Sentence>& sentences);

// Checks the single-root / acyclic / in-range head invariants.
// `line` is used for error messages only.
void validate_dependencies(const Sentence& sentence, std::size_t line = 0);

// One bracketed tree, e.g. `(S (NP (N ev)) (VP (V var)))`. Throws ParseError
// carrying a character offset.
ConstituencyNode parse_bracketed_tree(std::string_view line);
std::string write_bracketed_tree(const ConstituencyNode& node);

// Attaches trees read line-by-line (i-th line = i-th sentence, blank line =
// no tree).
void attach_trees(std::vector<Sentence>& sentences, std::istream& trees);

// Vowel count with Turkish vowels (incl. â, î, û); words without vowels
// count as one syllable.
int syllable_count(std::string_view word);

bool is_word(const Token& token);  // upos not PUNCT/SYM

// Word tokens (PUNCT and SYM removed) in document order. Pointers are into
// `document`, which must outlive the result.
std::vector<const Token*> word_tokens(const Document& document);
std::vector<const Token*> word_tokens(const Sentence& sentence);

std::size_t token_count(const Document& document);

// Throws DegenerateInputError when the document has no sentence or token.
void validate_document(const Document& document);

}  // namespace tura
