#pragma once

#include <string>
#include <string_view>
#include <vector>

// UTF-8 helpers with Turkish casing rules (I -> ı, İ -> i).
namespace tura::text {

// Invalid byte sequences decode to U+FFFD.
std::u32string decode_utf8(std::string_view bytes);
std::string encode_utf8(std::u32string_view code_points);

char32_t turkish_lower(char32_t c);
std::u32string turkish_lower(std::u32string_view word);
std::string turkish_lower(std::string_view word);

// Expects an already lowercased code point.
bool is_turkish_vowel(char32_t c);

bool is_letter_or_digit(char32_t c);

std::vector<std::string> split(std::string_view s, char sep);
std::string_view trim(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace tura::text
