#include "arcorpus/filter.hpp"

#include <json.hpp>

#include "arcorpus/error.hpp"
#include "arcorpus/parallel.hpp"
#include "arcorpus/utf8.hpp"

namespace arcorpus {

void Lexicon::add_line(std::string_view line) {
  for (std::string_view w : split_words(line)) {
    auto it = counts_.find(std::string(w));
    if (it == counts_.end()) {
      counts_.emplace(std::string(w), 1);
    } else {
      ++it->second;
    }
  }
}

void Lexicon::merge(const Lexicon& other) {
  for (const auto& [word, n] : other.counts_) counts_[word] += n;
}

std::uint64_t Lexicon::count(std::string_view word) const {
  auto it = counts_.find(std::string(word));
  return it == counts_.end() ? 0 : it->second;
}

Lexicon build_lexicon(std::span<const std::string> lines, unsigned workers) {
  auto partial = parallel_chunks<Lexicon>(lines.size(), workers, [&](std::size_t b, std::size_t e) {
    Lexicon lex;
    for (std::size_t i = b; i < e; ++i) lex.add_line(lines[i]);
    return lex;
  });
  Lexicon total = std::move(partial.front());
  for (std::size_t i = 1; i < partial.size(); ++i) total.merge(partial[i]);
  return total;
}

const char* to_string(DropReason reason) noexcept {
  switch (reason) {
    case DropReason::Kept: return "kept";
    case DropReason::ContainsDigit: return "contains_digit";
    case DropReason::Citation: return "citation";
    case DropReason::FloatingChar: return "floating_char";
    case DropReason::TooFewWords: return "too_few_words";
    case DropReason::TooManyWords: return "too_many_words";
    case DropReason::TooShort: return "too_short";
    case DropReason::TooLong: return "too_long";
    case DropReason::TooManyUnique: return "too_many_unique";
  }
  return "unknown";
}

Verdict check_line(std::string_view line, const Lexicon& lexicon, const FilterConfig& config) {
  const CodepointString cps = decode_utf8(line);
  for (Codepoint cp : cps) {
    if (is_digit(cp)) return {false, DropReason::ContainsDigit};
  }
  for (const auto& marker : config.citation_markers) {
    if (!marker.empty() && line.find(marker) != std::string_view::npos) {
      return {false, DropReason::Citation};
    }
  }
  const auto words = split_words(line);
  for (std::string_view w : words) {
    if (codepoint_count(w) == 1) return {false, DropReason::FloatingChar};
  }
  if (words.size() < config.min_words) return {false, DropReason::TooFewWords};
  if (words.size() > config.max_words) return {false, DropReason::TooManyWords};
  if (cps.size() < config.min_chars) return {false, DropReason::TooShort};
  if (cps.size() > config.max_chars) return {false, DropReason::TooLong};
  std::size_t hapax = 0;
  for (std::string_view w : words) {
    if (lexicon.count(w) <= 1) ++hapax;
  }
  if (hapax > config.max_hapax) return {false, DropReason::TooManyUnique};
  return {true, DropReason::Kept};
}

std::uint64_t DropReport::dropped() const {
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < kDropReasonCount; ++i) n += counts[i];
  return n;
}

std::string DropReport::to_tsv() const {
  std::string out;
  for (std::size_t i = 0; i < kDropReasonCount; ++i) {
    if (counts[i] == 0) continue;
    out += to_string(static_cast<DropReason>(i));
    out += '\t';
    out += std::to_string(counts[i]);
    out += '\n';
  }
  return out;
}

FilterResult filter_corpus(std::span<const std::string> lines, const FilterConfig& config,
                           unsigned workers) {
  const Lexicon lexicon = build_lexicon(lines, workers);
  const auto verdicts = parallel_map<Verdict>(
      lines.size(), workers, [&](std::size_t i) { return check_line(lines[i], lexicon, config); });
  FilterResult result;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    ++result.report[verdicts[i].reason];
    if (verdicts[i].keep) result.kept.push_back(lines[i]);
  }
  return result;
}

std::string filter_config_to_json(const FilterConfig& config) {
  nlohmann::ordered_json j;
  j["min_words"] = config.min_words;
  j["max_words"] = config.max_words;
  j["min_chars"] = config.min_chars;
  j["max_chars"] = config.max_chars;
  j["max_hapax"] = config.max_hapax;
  j["citation_markers"] = config.citation_markers;
  return j.dump(2, ' ', true);
}

FilterConfig filter_config_from_json(std::string_view text) {
  FilterConfig c;
  try {
    const auto j = nlohmann::json::parse(text);
    c.min_words = j.value("min_words", c.min_words);
    c.max_words = j.value("max_words", c.max_words);
    c.min_chars = j.value("min_chars", c.min_chars);
    c.max_chars = j.value("max_chars", c.max_chars);
    c.max_hapax = j.value("max_hapax", c.max_hapax);
    c.citation_markers = j.value("citation_markers", c.citation_markers);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidConfig, std::string("filter config: ") + e.what());
  }
  if (c.min_words > c.max_words || c.min_chars > c.max_chars) {
    throw Error(ErrorKind::InvalidConfig, "filter bounds are inverted");
  }
  return c;
}

}  // namespace arcorpus
