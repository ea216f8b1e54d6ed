#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcorpus/kernels/edit_distance.hpp"

namespace arcorpus {

enum class Granularity { Character, Word };

// Edit decomposition of a hypothesis against a reference. `reference_length`
// is N, the reference token count.
struct EditCounts {
  std::uint64_t substitutions = 0;
  std::uint64_t deletions = 0;
  std::uint64_t insertions = 0;
  std::uint64_t reference_length = 0;

  std::uint64_t distance() const noexcept { return substitutions + deletions + insertions; }

  EditCounts& operator+=(const EditCounts& other) noexcept;
  friend bool operator==(const EditCounts&, const EditCounts&) = default;
};

struct RateReport {
  double cer = 0.0;
  double wer = 0.0;
  EditCounts counts_char;
  EditCounts counts_word;
  std::uint64_t pairs = 0;
};

struct ReductionReport {
  double er_before = 0.0;
  double er_after = 0.0;
  double err = 0.0;
};

// Exact unit-cost Levenshtein alignment over integer tokens. Does not reject
// an empty reference; that check belongs to the rate functions.
EditCounts edit_counts(std::span<const kernels::Symbol> reference,
                       std::span<const kernels::Symbol> hypothesis);

// Token-sequence form; tokens are interned to integers per call.
// Throws Error(EmptyReference) when `reference` is empty.
EditCounts edit_counts(const std::vector<std::string>& reference,
                       const std::vector<std::string>& hypothesis);

// Character level counts codepoints (spaces included); word level splits on
// spaces. Does not throw on an empty reference.
EditCounts edit_counts(std::string_view reference, std::string_view hypothesis,
                       Granularity granularity);

// (S + D + I) / N. Throws Error(EmptyReference).
double rate(std::string_view reference, std::string_view hypothesis, Granularity granularity);

// (before - after) / before. Throws Error(DivisionByZero) when before == 0.
double err(double er_before, double er_after);
ReductionReport reduction(double er_before, double er_after);

enum class Averaging { Micro, Macro };

// Pooled counts over (reference, hypothesis) pairs. Micro divides total edits
// by total reference tokens; Macro averages per-pair rates (pairs with an
// empty reference at a granularity are skipped for that granularity).
// Throws Error(EmptyCorpus) on no pairs, Error(EmptyReference) when the pooled
// reference length is zero.
class RateAccumulator {
 public:
  void add(std::string_view reference, std::string_view hypothesis);
  void merge(const RateAccumulator& other);

  std::uint64_t pairs() const noexcept { return pairs_; }
  RateReport report(Averaging averaging = Averaging::Micro) const;

 private:
  EditCounts chars_;
  EditCounts words_;
  double cer_sum_ = 0.0;
  double wer_sum_ = 0.0;
  std::uint64_t cer_pairs_ = 0;
  std::uint64_t wer_pairs_ = 0;
  std::uint64_t pairs_ = 0;
};

using TextPair = std::pair<std::string, std::string>;

RateReport corpus_rates(std::span<const TextPair> pairs, Averaging averaging = Averaging::Micro,
                        unsigned workers = 1);

}  // namespace arcorpus
