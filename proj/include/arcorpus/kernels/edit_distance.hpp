#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace arcorpus::kernels {

using Symbol = std::uint32_t;

// Unit-cost Levenshtein distance plus the substitution count of the alignment
// chosen by a backtrace from the bottom-right cell that prefers the diagonal
// (match/substitution), then deletion, then insertion. Deletions and
// insertions follow from the lengths:
//   deletions  = (distance - substitutions + |ref| - |hyp|) / 2
//   insertions = (distance - substitutions - |ref| + |hyp|) / 2
struct AlignmentCost {
  std::uint32_t distance = 0;
  std::uint32_t substitutions = 0;

  friend bool operator==(const AlignmentCost&, const AlignmentCost&) = default;
};

enum class Isa { Scalar, Avx2, Neon };

const char* to_string(Isa isa) noexcept;

// Row-wise two-row DP. The reference every vector variant is tested against.
AlignmentCost align_scalar(std::span<const Symbol> ref, std::span<const Symbol> hyp);

#if defined(ARCORPUS_HAVE_AVX2)
// Anti-diagonal wavefront, 8 x int32 lanes. Caller must check CPU support.
AlignmentCost align_avx2(std::span<const Symbol> ref, std::span<const Symbol> hyp);
#endif

#if defined(ARCORPUS_HAVE_NEON)
AlignmentCost align_neon(std::span<const Symbol> ref, std::span<const Symbol> hyp);
#endif

// ISAs compiled in AND supported by the running CPU. Always contains Scalar.
std::vector<Isa> available_isas();

// Picked once on first use: the widest available ISA, unless the environment
// variable ARCORPUS_KERNEL names another available one ("scalar", "avx2",
// "neon").
Isa active_isa();

AlignmentCost align(std::span<const Symbol> ref, std::span<const Symbol> hyp);
AlignmentCost align(std::span<const Symbol> ref, std::span<const Symbol> hyp, Isa isa);

}  // namespace arcorpus::kernels
