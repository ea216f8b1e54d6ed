#include <vector>

#include "arcorpus/kernels/edit_distance.hpp"

namespace arcorpus::kernels {

AlignmentCost align_scalar(std::span<const Symbol> ref, std::span<const Symbol> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  if (n == 0 || m == 0) {
    return {static_cast<std::uint32_t>(n + m), 0};
  }

  // prev/cur hold row i-1 and row i; column j is the hyp prefix length.
  std::vector<AlignmentCost> prev(m + 1);
  std::vector<AlignmentCost> cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = {static_cast<std::uint32_t>(j), 0};

  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = {static_cast<std::uint32_t>(i), 0};
    const Symbol a = ref[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t mismatch = a != hyp[j - 1] ? 1u : 0u;
      const std::uint32_t diag = prev[j - 1].distance + mismatch;
      const std::uint32_t del = prev[j].distance + 1;
      const std::uint32_t ins = cur[j - 1].distance + 1;
      if (diag <= del && diag <= ins) {
        cur[j] = {diag, prev[j - 1].substitutions + mismatch};
      } else if (del <= ins) {
        cur[j] = {del, prev[j].substitutions};
      } else {
        cur[j] = {ins, cur[j - 1].substitutions};
      }
    }
    prev.swap(cur);
  }
  return prev[m];
}

}  // namespace arcorpus::kernels
