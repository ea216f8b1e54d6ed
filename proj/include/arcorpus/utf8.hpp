#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace arcorpus {

using Codepoint = std::uint32_t;
using CodepointString = std::u32string;

inline constexpr Codepoint kReplacementChar = 0xFFFD;
inline constexpr Codepoint kSpace = 0x20;

// Decodes UTF-8. Ill-formed sequences (overlongs, surrogates, truncation)
// decode to U+FFFD one byte at a time, so decoding is total.
CodepointString decode_utf8(std::string_view text);

std::string encode_utf8(std::u32string_view text);
void append_utf8(std::string& out, Codepoint cp);

bool is_valid_utf8(std::string_view text) noexcept;

// Number of codepoints; ill-formed bytes count one each.
std::size_t codepoint_count(std::string_view text);

// ASCII digits, Arabic-Indic (U+0660..U+0669) and extended Arabic-Indic
// (U+06F0..U+06F9) digits.
constexpr bool is_digit(Codepoint cp) noexcept {
  return (cp >= '0' && cp <= '9') || (cp >= 0x0660 && cp <= 0x0669) || (cp >= 0x06F0 && cp <= 0x06F9);
}

constexpr bool is_ascii_letter(Codepoint cp) noexcept {
  return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}

// Maximal runs of non-space characters.
std::vector<std::string_view> split_words(std::string_view text);

}  // namespace arcorpus
