#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tura {

// Lemma -> frequency. Keys are stored Turkish-lowercased; lookups normalize
// their argument the same way. Familiarity lists carry frequency 1.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::string name) : name_(std::move(name)) {}

  // Throws Error on a duplicate (after normalization) or negative count.
  void add(std::string_view lemma, double frequency);

  const std::string& name() const { return name_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(std::string_view lemma) const;
  // 0 for lemmas not in the lexicon.
  double frequency(std::string_view lemma) const;

 private:
  std::string name_;
  std::unordered_map<std::string, double> entries_;
};

// UTF-8 TSV `lemma<TAB>count`, one entry per line.
Lexicon load_frequency_lexicon(const std::filesystem::path& path);
// One lemma per line.
Lexicon load_word_list(const std::filesystem::path& path);

}  // namespace tura
