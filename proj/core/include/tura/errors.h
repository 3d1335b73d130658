#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tura {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `position` is a 1-based line number for line-oriented
// formats and a 0-based character offset for bracketed trees.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Manifest, lexicon or soft-label file problems. Collects every offending
// row so users can fix a file in one pass.
class LoadError : public Error {
 public:
  explicit LoadError(std::vector<std::string> problems)
      : Error(summarize(problems)), problems_(std::move(problems)) {}
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  static std::string summarize(const std::vector<std::string>& problems) {
    std::string msg;
    for (const auto& p : problems) {
      if (!msg.empty()) msg += "\n";
      msg += p;
    }
    return msg;
  }

  std::vector<std::string> problems_;
};

// A document has nothing to measure (e.g. no word tokens).
class DegenerateInputError : public Error {
 public:
  DegenerateInputError(const std::string& doc_id, const std::string& what)
      : Error(doc_id.empty() ? what : doc_id + ": " + what), doc_id_(doc_id) {}
  const std::string& doc_id() const { return doc_id_; }

 private:
  std::string doc_id_;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

}  // namespace tura
