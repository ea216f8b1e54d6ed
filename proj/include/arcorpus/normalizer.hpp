#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arcorpus/utf8.hpp"

namespace arcorpus {

struct RawArticle {
  std::string id;
  std::string text;
};

struct CandidateLine {
  std::string text;
  std::string source_article;
};

struct NormalizerConfig {
  // Permitted codepoints; everything else becomes a space. Space itself is
  // always permitted.
  std::set<Codepoint> valid_chars;
  std::set<Codepoint> diacritics;
  std::map<Codepoint, CodepointString> ligatures;
  std::size_t max_repeat = 2;

  // Arabic letters U+0621..U+063A and U+0641..U+064A plus space.
  static NormalizerConfig defaults();

  bool is_valid(Codepoint cp) const { return cp == kSpace || valid_chars.count(cp) != 0; }

  // The ordered alphabet an injector may draw from: valid_chars ∪ {space}.
  CodepointString alphabet() const;
};

// Ordered transforms: ligature expansion, diacritic removal, repeat squeezing,
// invalid-to-space, whitespace collapse and trim. Total and idempotent.
std::string normalize_line(std::string_view text, const NormalizerConfig& config);
CodepointString normalize_codepoints(std::u32string_view text, const NormalizerConfig& config);

// Splits on newlines and full stops (ASCII '.', Arabic U+06D4, and the
// question/exclamation marks), normalizes each piece, drops empty results.
std::vector<CandidateLine> segment_article(const RawArticle& article, const NormalizerConfig& config);

// JSON keys: valid_chars, diacritics (strings), ligatures (object
// string -> string), max_repeat. Missing keys keep their defaults.
std::string normalizer_config_to_json(const NormalizerConfig& config);
NormalizerConfig normalizer_config_from_json(std::string_view json);

}  // namespace arcorpus
