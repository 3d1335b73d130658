#include <doctest.h>

#include <filesystem>

#include "builders.h"
#include "tura/corpus.h"
#include "tura/errors.h"
#include "tura/io.h"
#include "tura/manifest.h"

using namespace tura;

namespace {

const char* kSample =
    "# sent_id = 1\n"
    "# text = Ali eve gitti.\n"
    "1\tAli\tAli\tPROPN\t_\t_\t3\tnsubj\t_\tNE=B-PER\n"
    "2-3\teve gitti\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "2\teve\tev\tNOUN\t_\t_\t3\tobl\t_\t_\n"
    "3\tgitti\tgit\tVERB\t_\t_\t0\troot\t_\tSpaceAfter=No\n"
    "3.1\tx\tx\tX\t_\t_\t_\t_\t_\t_\n"
    "4\t.\t.\tPUNCT\t_\t_\t3\tpunct\t_\t_\n"
    "\n"
    "1\tKitap\t_\tNOUN\t_\t_\t0\troot\t_\tNE=O\n";

}  // namespace

TEST_CASE("parse_conllu reads tokens, entity tags and skips ranges and empty nodes") {
  const auto sentences = parse_conllu(std::string_view(kSample));
  REQUIRE(sentences.size() == 2);
  const auto& s = sentences[0];
  REQUIRE(s.tokens.size() == 4);
  CHECK(s.tokens[0].surface == "Ali");
  CHECK(s.tokens[0].entity_tag == "B-PER");
  CHECK(s.tokens[1].lemma == "ev");
  CHECK(s.tokens[1].upos == Upos::NOUN);
  CHECK(s.tokens[2].head == 0);
  CHECK(s.tokens[2].entity_tag == "O");
  CHECK(s.tokens[3].deprel == "punct");
  CHECK(sentences[1].tokens[0].lemma == "Kitap");
}

TEST_CASE("write_conllu round trips") {
  const auto sentences = parse_conllu(std::string_view(kSample));
  CHECK(parse_conllu(write_conllu(sentences)) == sentences);
}

TEST_CASE("conllu structural errors name the line") {
  const std::string two_roots =
      "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n2\tb\tb\tNOUN\t_\t_\t0\troot\t_\t_\n";
  CHECK_THROWS_AS(parse_conllu(two_roots), ParseError);
  const std::string out_of_range = "1\ta\ta\tNOUN\t_\t_\t0\troot\t_\t_\n2\tb\tb\tNOUN\t_\t_\t5\tobj\t_\t_\n";
  try {
    parse_conllu(out_of_range);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  const std::string cycle =
      "1\ta\ta\tNOUN\t_\t_\t2\tnmod\t_\t_\n2\tb\tb\tNOUN\t_\t_\t1\tnmod\t_\t_\n"
      "3\tc\tc\tVERB\t_\t_\t0\troot\t_\t_\n";
  CHECK_THROWS_AS(parse_conllu(cycle), ParseError);
  const std::string self = "1\ta\ta\tNOUN\t_\t_\t1\troot\t_\t_\n";
  CHECK_THROWS_AS(parse_conllu(self), ParseError);
  CHECK_THROWS_AS(parse_conllu(std::string("1\ta\ta\tBOGUS\t_\t_\t0\troot\t_\t_\n")), ParseError);
  CHECK_THROWS_AS(parse_conllu(std::string("1\ta\ta\n")), ParseError);
}

TEST_CASE("bracketed tree depth") {
  CHECK(parse_bracketed_tree("(X kedi)").depth() == 1);
  CHECK(parse_bracketed_tree("(S (NP (N ev)) (VP (V var)))").depth() == 3);
  const auto t = parse_bracketed_tree("  (S (NP (N ev) (N kapı)) (V var))  ");
  CHECK(t.label == "S");
  CHECK(t.children.size() == 2);
  CHECK(t.children[0].children[1].leaf_surface == std::optional<std::string>("kapı"));
}

TEST_CASE("bracketed tree round trip and errors") {
  const std::string s = "(S (NP (N ev)) (VP (V var)))";
  CHECK(write_bracketed_tree(parse_bracketed_tree(s)) == s);
  CHECK_THROWS_AS(parse_bracketed_tree("(S (NP (N ev))"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_tree("(S (N ev)))"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_tree("()"), ParseError);
  CHECK_THROWS_AS(parse_bracketed_tree(""), ParseError);
}

TEST_CASE("attach_trees matches lines to sentences; blank lines mean no tree") {
  auto sentences = parse_conllu(std::string_view(kSample));
  std::istringstream trees("\n(S (N kitap))\n");
  attach_trees(sentences, trees);
  CHECK_FALSE(sentences[0].const_tree.has_value());
  REQUIRE(sentences[1].const_tree.has_value());
  CHECK(sentences[1].const_tree->depth() == 2);
  std::istringstream too_many("(X a)\n(X b)\n(X c)\n");
  CHECK_THROWS_AS(attach_trees(sentences, too_many), Error);
}

TEST_CASE("syllables are vowel counts with a floor of one") {
  CHECK(syllable_count("kitap") == 2);
  CHECK(syllable_count("ağaç") == 2);
  CHECK(syllable_count("İstanbul") == 3);
  CHECK(syllable_count("IŞIK") == 2);
  CHECK(syllable_count("kâğıt") == 2);
  CHECK(syllable_count("hmm") == 1);
  CHECK(syllable_count("öğretmenlerimizden") == 7);
}

TEST_CASE("word tokens exclude punctuation and symbols") {
  using testing::tok;
  Sentence s;
  s.tokens = {tok("Ali", "Ali", Upos::PROPN, 3, "nsubj"), tok("%", "%", Upos::SYM, 3, "dep"),
              tok("geldi", "gel", Upos::VERB, 0, "root"), tok(".", ".", Upos::PUNCT, 3, "punct")};
  CHECK(word_tokens(s).size() == 2);
  const auto d = testing::make_doc("d", ReadingLevel::kElementary, {s, s});
  CHECK(word_tokens(d).size() == 4);
  CHECK(token_count(d) == 8);
  CHECK_NOTHROW(validate_document(d));
  CHECK_THROWS_AS(validate_document(testing::make_doc("e", ReadingLevel::kElementary, {})),
                  DegenerateInputError);
}

TEST_CASE("levels parse and order") {
  CHECK(parse_level("ELE") == ReadingLevel::kElementary);
  CHECK(parse_level("ADV") == ReadingLevel::kAdvanced);
  CHECK_FALSE(parse_level("MID").has_value());
  CHECK(ordinal(ReadingLevel::kIntermediate) == 1);
  CHECK(level_from_ordinal(2) == ReadingLevel::kAdvanced);
  CHECK(level_code(ReadingLevel::kElementary) == "ELE");
}

TEST_CASE("random documents survive a CoNLL-U round trip") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto doc = testing::random_document(rng, "r" + std::to_string(i));
    CHECK(parse_conllu(write_conllu(doc.sentences)) == doc.sentences);
  }
}

TEST_CASE("manifest loading collects every problem") {
  namespace fs = std::filesystem;
  const auto dir = fs::temp_directory_path() / "tura_manifest_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  io::write_file_atomic(dir / "a.conllu", "1\tev\tev\tNOUN\t_\t_\t0\troot\t_\t_\n");
  io::write_file_atomic(dir / "a.trees", "(S (N ev))\n");
  io::write_file_atomic(dir / "good.csv",
                        "doc_id,level,conllu_path,trees_path\n"
                        "a,ELE,a.conllu,a.trees\n"
                        "b,ADV,a.conllu,\n");
  const auto corpus = load_manifest(dir / "good.csv");
  REQUIRE(corpus.documents.size() == 2);
  CHECK(corpus.documents[0].sentences[0].const_tree.has_value());
  CHECK_FALSE(corpus.documents[1].sentences[0].const_tree.has_value());
  CHECK(corpus.level_counts[0] == 1);
  CHECK(corpus.level_counts[2] == 1);

  io::write_file_atomic(dir / "bad.csv",
                        "doc_id,level,conllu_path,trees_path\n"
                        "a,MID,a.conllu,\n"
                        "a,ELE,missing.conllu,\n");
  try {
    load_manifest(dir / "bad.csv");
    FAIL("expected LoadError");
  } catch (const LoadError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("unknown level: MID") != std::string::npos);
    CHECK(msg.find("duplicate doc_id") != std::string::npos);
    CHECK(msg.find("unreadable file") != std::string::npos);
    CHECK(e.problems().size() >= 3);
  }
  fs::remove_all(dir);
}
