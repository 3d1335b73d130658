#pragma once

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Minimal RFC 4180 reader/writer: quoted fields, doubled quotes, CRLF.
namespace tura::csv {

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line where the record starts
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}
  // Returns nullopt at end of input. Comment lines starting with '#' are
  // skipped only when `skip_comments` is set.
  std::optional<Record> next(bool skip_comments = false);

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::string escape(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);

}  // namespace tura::csv
