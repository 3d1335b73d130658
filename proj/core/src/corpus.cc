#include "tura/corpus.h"

#include <charconv>
#include <sstream>

#include "tura/errors.h"
#include "tura/text.h"

namespace tura {

namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string line_suffix(std::size_t line) {
  return line > 0 ? ", line " + std::to_string(line) : std::string();
}

// `lines[i]` is the source line of token i+1 (0 when unknown).
void check_heads(const Sentence& sentence, const std::vector<std::size_t>& lines,
                 std::size_t fallback_line) {
  const int n = static_cast<int>(sentence.tokens.size());
  const auto line_of = [&](int i) {
    return i < static_cast<int>(lines.size()) && lines[i] > 0 ? lines[i]
                                                               : fallback_line;
  };
  int roots = 0;
  for (int i = 0; i < n; ++i) {
    const int head = sentence.tokens[i].head;
    if (head < 0 || head > n) {
      throw ParseError("head out of range" + line_suffix(line_of(i)), line_of(i));
    }
    if (head == i + 1) {
      throw ParseError("token is its own head" + line_suffix(line_of(i)),
                       line_of(i));
    }
    if (head == 0) ++roots;
  }
  if (n > 0 && roots != 1) {
    throw ParseError("sentence must have exactly one root, found " +
                         std::to_string(roots) + line_suffix(line_of(0)),
                     line_of(0));
  }
  // 0 = unvisited, 1 = on current path, 2 = reaches root.
  std::vector<char> state(n + 1, 0);
  state[0] = 2;
  for (int start = 1; start <= n; ++start) {
    std::vector<int> path;
    int cur = start;
    while (state[cur] == 0) {
      state[cur] = 1;
      path.push_back(cur);
      cur = sentence.tokens[cur - 1].head;
    }
    if (state[cur] == 1) {
      throw ParseError("cyclic head links" + line_suffix(line_of(start - 1)),
                       line_of(start - 1));
    }
    for (int id : path) state[id] = 2;
  }
}

std::string misc_entity(std::string_view misc) {
  if (misc == "_") return "O";
  for (const auto& item : text::split(misc, '|')) {
    if (item.rfind("NE=", 0) == 0) {
      std::string tag = item.substr(3);
      return tag.empty() ? "O" : tag;
    }
  }
  return "O";
}

}  // namespace

std::optional<Upos> parse_upos(std::string_view tag) {
  for (std::size_t i = 0; i < kNumUpos; ++i) {
    if (kUposTags[i] == tag) return static_cast<Upos>(i);
  }
  return std::nullopt;
}

std::string_view to_string(Upos tag) {
  return kUposTags[static_cast<std::size_t>(tag)];
}

std::string_view level_code(ReadingLevel level) {
  switch (level) {
    case ReadingLevel::kElementary:
      return "ELE";
    case ReadingLevel::kIntermediate:
      return "INT";
    case ReadingLevel::kAdvanced:
      return "ADV";
  }
  return "?";
}

std::optional<ReadingLevel> parse_level(std::string_view code) {
  if (code == "ELE") return ReadingLevel::kElementary;
  if (code == "INT") return ReadingLevel::kIntermediate;
  if (code == "ADV") return ReadingLevel::kAdvanced;
  return std::nullopt;
}

ReadingLevel level_from_ordinal(int value) {
  if (value < 0 || value >= kNumLevels) {
    throw Error("reading level ordinal out of range: " + std::to_string(value));
  }
  return static_cast<ReadingLevel>(value);
}

int ConstituencyNode::depth() const {
  if (children.empty()) return 1;
  int deepest = 0;
  for (const auto& child : children) deepest = std::max(deepest, child.depth());
  return deepest + 1;
}

void validate_dependencies(const Sentence& sentence, std::size_t line) {
  check_heads(sentence, {}, line);
}

std::vector<Sentence> parse_conllu(std::istream& in) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::vector<std::size_t> token_lines;
  std::size_t line_no = 0;

  const auto flush = [&] {
    if (current.tokens.empty()) return;
    check_heads(current, token_lines, line_no);
    sentences.push_back(std::move(current));
    current = Sentence{};
    token_lines.clear();
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (text::trim(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') continue;

    const auto cols = text::split(line, '\t');
    if (cols.size() != 10) {
      throw ParseError("malformed line: expected 10 columns, found " +
                           std::to_string(cols.size()) + line_suffix(line_no),
                       line_no);
    }
    const std::string& id = cols[0];
    if (id.find('-') != std::string::npos || id.find('.') != std::string::npos) {
      continue;  // multiword range or empty node
    }
    const auto parsed_id = parse_int(id);
    if (!parsed_id || *parsed_id != static_cast<int>(current.tokens.size()) + 1) {
      throw ParseError("unexpected token id '" + id + "'" + line_suffix(line_no),
                       line_no);
    }
    const auto upos = parse_upos(cols[3]);
    if (!upos) {
      throw ParseError("unknown UPOS tag '" + cols[3] + "'" + line_suffix(line_no),
                       line_no);
    }
    const auto head = parse_int(cols[6]);
    if (!head) {
      throw ParseError("non-integer HEAD '" + cols[6] + "'" + line_suffix(line_no),
                       line_no);
    }
    Token token;
    token.surface = cols[1];
    token.lemma = cols[2] == "_" && cols[1] != "_" ? cols[1] : cols[2];
    token.upos = *upos;
    token.head = *head;
    token.deprel = cols[7];
    token.entity_tag = misc_entity(cols[9]);
    current.tokens.push_back(std::move(token));
    token_lines.push_back(line_no);
  }
  flush();
  return sentences;
}

std::vector<Sentence> parse_conllu(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_conllu(in);
}

std::string write_conllu(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const auto& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const Token& t = sentence.tokens[i];
      const std::string misc = t.entity_tag == "O" ? "_" : "NE=" + t.entity_tag;
      out += std::to_string(i + 1) + '\t' + t.surface + '\t' + t.lemma + '\t' +
             std::string(to_string(t.upos)) + "\t_\t_\t" +
             std::to_string(t.head) + '\t' + t.deprel + "\t_\t" + misc + '\n';
    }
    out += '\n';
  }
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view s) : s_(s) {}

  ConstituencyNode parse() {
    skip_space();
    if (pos_ >= s_.size()) fail("empty tree");
    ConstituencyNode root = node();
    skip_space();
    if (pos_ < s_.size()) {
      if (s_[pos_] == ')') fail("unbalanced parentheses");
      fail("trailing characters after tree");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_space() {
    while (pos_ < s_.size() &&
           (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r' ||
            s_[pos_] == '\n')) {
      ++pos_;
    }
  }

  std::string atom() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')' &&
           s_[pos_] != ' ' && s_[pos_] != '\t' && s_[pos_] != '\r' &&
           s_[pos_] != '\n') {
      ++pos_;
    }
    return std::string(s_.substr(start, pos_ - start));
  }

  ConstituencyNode node() {
    if (s_[pos_] != '(') fail("expected '('");
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    if (pos_ >= s_.size()) fail("unbalanced parentheses");
    if (s_[pos_] == ')') {
      pos_ = open;
      fail("empty node");
    }
    ConstituencyNode n;
    if (s_[pos_] != '(') n.label = atom();
    std::vector<std::string> leaves;
    while (true) {
      skip_space();
      if (pos_ >= s_.size()) fail("unbalanced parentheses");
      const char c = s_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        n.children.push_back(node());
      } else {
        leaves.push_back(atom());
      }
    }
    if (!leaves.empty() && !n.children.empty()) {
      pos_ = open;
      fail("node mixes children and leaf text");
    }
    if (leaves.size() > 1) {
      pos_ = open;
      fail("preterminal with more than one leaf");
    }
    if (leaves.empty() && n.children.empty()) {
      pos_ = open;
      fail("empty node");
    }
    if (!leaves.empty()) n.leaf_surface = std::move(leaves.front());
    return n;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ConstituencyNode parse_bracketed_tree(std::string_view line) {
  return TreeParser(line).parse();
}

std::string write_bracketed_tree(const ConstituencyNode& node) {
  std::string out = "(" + node.label;
  if (node.leaf_surface) {
    out += ' ';
    out += *node.leaf_surface;
  }
  for (const auto& child : node.children) {
    out += ' ';
    out += write_bracketed_tree(child);
  }
  out += ')';
  return out;
}

void attach_trees(std::vector<Sentence>& sentences, std::istream& trees) {
  std::string line;
  std::size_t index = 0;
  while (std::getline(trees, line)) {
    const auto trimmed = text::trim(line);
    if (!trimmed.empty()) {
      if (index >= sentences.size()) {
        throw ParseError("more trees than sentences" + line_suffix(index + 1),
                         index + 1);
      }
      try {
        sentences[index].const_tree = parse_bracketed_tree(trimmed);
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + line_suffix(index + 1), index + 1);
      }
    }
    ++index;
  }
}

int syllable_count(std::string_view word) {
  const std::u32string cps = text::turkish_lower(text::decode_utf8(word));
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && !text::is_letter_or_digit(cps[begin])) ++begin;
  while (end > begin && !text::is_letter_or_digit(cps[end - 1])) --end;
  int vowels = 0;
  for (std::size_t i = begin; i < end; ++i) {
    if (text::is_turkish_vowel(cps[i])) ++vowels;
  }
  return vowels > 0 ? vowels : 1;
}

bool is_word(const Token& token) {
  return token.upos != Upos::PUNCT && token.upos != Upos::SYM;
}

std::vector<const Token*> word_tokens(const Sentence& sentence) {
  std::vector<const Token*> words;
  for (const auto& token : sentence.tokens) {
    if (is_word(token)) words.push_back(&token);
  }
  return words;
}

std::vector<const Token*> word_tokens(const Document& document) {
  std::vector<const Token*> words;
  for (const auto& sentence : document.sentences) {
    for (const auto& token : sentence.tokens) {
      if (is_word(token)) words.push_back(&token);
    }
  }
  return words;
}

std::size_t token_count(const Document& document) {
  std::size_t n = 0;
  for (const auto& sentence : document.sentences) n += sentence.tokens.size();
  return n;
}

void validate_document(const Document& document) {
  if (document.sentences.empty()) {
    throw DegenerateInputError(document.doc_id, "document has no sentences");
  }
  if (token_count(document) == 0) {
    throw DegenerateInputError(document.doc_id, "document has no tokens");
  }
}

}  // namespace tura
