#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace tura::io {

std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it into place, so readers
// never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view contents);

// Round-trip decimal representation of a double ("%.17g" trimmed to the
// shortest form that parses back to the same value).
std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace tura::io
