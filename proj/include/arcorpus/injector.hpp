#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "arcorpus/rng.hpp"
#include "arcorpus/utf8.hpp"

namespace arcorpus {

enum class OpKind : std::uint8_t { Insertion, Deletion, Substitution, Transposition, Mapping };

inline constexpr std::size_t kOpKindCount = 5;

const char* to_string(OpKind kind) noexcept;
std::optional<OpKind> op_kind_from_string(std::string_view name) noexcept;

struct FixedPsi {
  double psi = 0.05;
};
// Every line is emitted once per listed ratio.
struct MixedPsi {
  std::vector<double> psis{0.05, 0.10};
};
// Per-line ratio drawn uniformly from [min, max].
struct VariedPsi {
  double min = 0.025;
  double max = 0.10;
};
using PsiPolicy = std::variant<FixedPsi, MixedPsi, VariedPsi>;

struct MappingRule {
  CodepointString pattern;
  std::vector<CodepointString> targets;
};

struct CorruptionConfig {
  PsiPolicy psi = FixedPsi{};
  std::vector<OpKind> ops{OpKind::Insertion, OpKind::Deletion, OpKind::Substitution,
                          OpKind::Transposition, OpKind::Mapping};
  // Sampling weight per entry of `ops`; empty means uniform.
  std::vector<double> op_weights;
  std::map<Codepoint, CodepointString> keyboard_neighbors;
  std::vector<MappingRule> mapping_rules;
  double substitution_keyboard_prob = 0.5;
  // When set, half of all deletions remove one occurrence of a mapping-rule
  // pattern instead of a single codepoint.
  bool pattern_deletion = false;
  // Codepoints that insertion and random substitution draw from.
  CodepointString alphabet;
  std::uint64_t seed = 0;

  // Default alphabet (normalizer whitelist plus space), Arabic 101 keyboard
  // adjacency, and hamza-seat / taa marbuta / alif maqsura confusions.
  static CorruptionConfig defaults();

  // Throws Error(InvalidConfig) on any broken invariant.
  void validate() const;
};

std::map<Codepoint, CodepointString> arabic_keyboard_neighbors();
std::vector<MappingRule> default_mapping_rules();

std::string corruption_config_to_json(const CorruptionConfig& config);
CorruptionConfig corruption_config_from_json(std::string_view json);

struct OpRecord {
  OpKind kind = OpKind::Insertion;
  std::size_t position = 0;  // codepoint index in the line before this op
  std::string removed;
  std::string added;
  bool applied = true;  // false: mapping without a matching pattern, or retries exhausted

  // Upper bound on the edit distance this op adds: 2 for a transposition,
  // otherwise max(|removed|, |added|) in codepoints; 0 when not applied.
  std::size_t cost_bound() const;

  friend bool operator==(const OpRecord&, const OpRecord&) = default;
};

struct SentencePair {
  std::string corrupted;
  std::string clean;
  std::vector<OpRecord> ops;
  double psi_used = 0.0;
  std::uint64_t line_index = 0;

  friend bool operator==(const SentencePair&, const SentencePair&) = default;
};

// floor(length * psi), with a 1e-9 guard so decimal ratios such as 0.29 * 100
// are not truncated by binary rounding.
std::size_t op_count(std::size_t length, double psi);

// Positional edit primitives; positions are codepoint indices and must be in
// range (the line is not modified otherwise and the record is not applied).
OpRecord insert_at(CodepointString& line, std::size_t pos, Codepoint cp);
OpRecord delete_at(CodepointString& line, std::size_t pos, std::size_t count = 1);
OpRecord substitute_at(CodepointString& line, std::size_t pos, Codepoint cp);
OpRecord transpose_at(CodepointString& line, std::size_t pos);
OpRecord replace_at(CodepointString& line, std::size_t pos, std::size_t length,
                    const CodepointString& target);

// One randomized operation. Returns nullopt when the kind's precondition fails
// on `line` (empty line, or fewer than two codepoints for a transposition);
// the caller redraws the kind.
std::optional<OpRecord> apply_op(CodepointString& line, OpKind kind, Rng& rng,
                                 const CorruptionConfig& config);

// Deterministic in (line, psi, seed, config). The op count comes from the
// original length.
SentencePair corrupt_line(std::string_view line, double psi, std::uint64_t seed,
                          const CorruptionConfig& config);

struct CorruptionResult {
  std::vector<SentencePair> pairs;
  std::uint64_t discarded = 0;  // pairs whose corrupted side became empty
};

// Number of passes a policy makes over the corpus (the list length for Mixed,
// 1 otherwise).
std::size_t psi_slots(const PsiPolicy& policy);

// Corrupts one ratio slot of a batch whose first line has global index
// `first_index`. Seeds depend only on config.seed, the global index, and the
// slot, so batching and worker count never change the output.
CorruptionResult corrupt_batch(std::span<const std::string> lines, const CorruptionConfig& config,
                               std::size_t slot, std::uint64_t first_index = 0,
                               unsigned workers = 1);

// Whole-corpus form. Mixed policies emit every line at the first ratio, then
// every line at the second, and so on.
CorruptionResult corrupt_corpus(std::span<const std::string> lines, const CorruptionConfig& config,
                                unsigned workers = 1);

// One JSON object per pair: index, psi, ops.
std::string op_log_record(const SentencePair& pair);

}  // namespace arcorpus
