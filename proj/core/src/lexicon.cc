#include "tura/lexicon.h"

#include <fstream>

#include "tura/errors.h"
#include "tura/io.h"
#include "tura/text.h"

namespace tura {

void Lexicon::add(std::string_view lemma, double frequency) {
  if (frequency < 0) {
    throw Error("negative frequency for '" + std::string(lemma) + "'");
  }
  auto key = text::turkish_lower(lemma);
  if (!entries_.emplace(key, frequency).second) {
    throw Error("duplicate lemma '" + key + "'");
  }
}

bool Lexicon::contains(std::string_view lemma) const {
  return entries_.count(text::turkish_lower(lemma)) > 0;
}

double Lexicon::frequency(std::string_view lemma) const {
  const auto it = entries_.find(text::turkish_lower(lemma));
  return it == entries_.end() ? 0.0 : it->second;
}

namespace {

template <typename LineFn>
Lexicon load_lines(const std::filesystem::path& path, LineFn&& on_line) {
  std::ifstream in(path);
  if (!in) throw LoadError({"cannot open lexicon " + path.string()});
  Lexicon lexicon(path.filename().string());
  std::vector<std::string> problems;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty()) continue;
    try {
      on_line(lexicon, trimmed);
    } catch (const Error& e) {
      problems.push_back(path.filename().string() + " line " +
                         std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!problems.empty()) throw LoadError(std::move(problems));
  return lexicon;
}

}  // namespace

Lexicon load_frequency_lexicon(const std::filesystem::path& path) {
  return load_lines(path, [](Lexicon& lex, std::string_view line) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) throw Error("expected lemma<TAB>count");
    const auto lemma = text::trim(line.substr(0, tab));
    if (lemma.empty()) throw Error("empty lemma");
    lex.add(lemma, io::parse_double(text::trim(line.substr(tab + 1))));
  });
}

Lexicon load_word_list(const std::filesystem::path& path) {
  return load_lines(path, [](Lexicon& lex, std::string_view line) {
    lex.add(line, 1.0);
  });
}

}  // namespace tura
