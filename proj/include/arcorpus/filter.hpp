#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arcorpus {

// Token -> occurrence count over the whole candidate corpus.
class Lexicon {
 public:
  void add_line(std::string_view line);
  void merge(const Lexicon& other);

  std::uint64_t count(std::string_view word) const;
  std::size_t size() const noexcept { return counts_.size(); }
  bool empty() const noexcept { return counts_.empty(); }
  const std::unordered_map<std::string, std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  std::unordered_map<std::string, std::uint64_t> counts_;
};

Lexicon build_lexicon(std::span<const std::string> lines, unsigned workers = 1);

// Rule order matters: check_line reports the first failing rule in this order.
enum class DropReason : std::uint8_t {
  Kept,
  ContainsDigit,
  Citation,
  FloatingChar,
  TooFewWords,
  TooManyWords,
  TooShort,
  TooLong,
  TooManyUnique,
};

inline constexpr std::size_t kDropReasonCount = 9;

const char* to_string(DropReason reason) noexcept;

struct Verdict {
  bool keep = true;
  DropReason reason = DropReason::Kept;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct FilterConfig {
  std::size_t min_words = 3;
  std::size_t max_words = 20;
  std::size_t min_chars = 15;
  std::size_t max_chars = 128;
  std::size_t max_hapax = 2;
  // A line containing any of these substrings is citation content. Inert
  // under the default normalizer, which strips every listed character.
  std::vector<std::string> citation_markers = {"[", "]", "(", ")", "{", "}", "«", "»"};
};

std::string filter_config_to_json(const FilterConfig& config);
FilterConfig filter_config_from_json(std::string_view json);

Verdict check_line(std::string_view line, const Lexicon& lexicon, const FilterConfig& config);

struct DropReport {
  std::array<std::uint64_t, kDropReasonCount> counts{};

  std::uint64_t& operator[](DropReason r) { return counts[static_cast<std::size_t>(r)]; }
  std::uint64_t operator[](DropReason r) const { return counts[static_cast<std::size_t>(r)]; }
  std::uint64_t kept() const { return (*this)[DropReason::Kept]; }
  std::uint64_t dropped() const;
  std::uint64_t total() const { return kept() + dropped(); }
  bool empty() const { return total() == 0; }

  // "reason\tcount" rows in rule order, non-zero rows only.
  std::string to_tsv() const;
};

struct FilterResult {
  std::vector<std::string> kept;
  DropReport report;
};

// Two passes: lexicon over all lines, then a per-line verdict against it.
// Output keeps input order regardless of `workers`.
FilterResult filter_corpus(std::span<const std::string> lines, const FilterConfig& config,
                           unsigned workers = 1);

}  // namespace arcorpus
