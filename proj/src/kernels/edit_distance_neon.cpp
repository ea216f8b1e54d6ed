// AArch64 only; Advanced SIMD is mandatory there so no runtime probe is needed.

#include <arm_neon.h>

#include <algorithm>
#include <vector>

#include "arcorpus/kernels/edit_distance.hpp"

namespace arcorpus::kernels {

// Same anti-diagonal wavefront as the AVX2 kernel, 4 x u32 lanes.
AlignmentCost align_neon(std::span<const Symbol> ref, std::span<const Symbol> hyp) {
  constexpr std::size_t kLanes = 4;
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  if (n == 0 || m == 0) {
    return {static_cast<std::uint32_t>(n + m), 0};
  }

  std::vector<std::uint32_t> hyp_rev(hyp.rbegin(), hyp.rend());
  const std::size_t width = n + 1 + kLanes;
  std::vector<std::uint32_t> buf(6 * width, 0);
  std::uint32_t* cost2 = buf.data();
  std::uint32_t* cost1 = cost2 + width;
  std::uint32_t* cost0 = cost1 + width;
  std::uint32_t* subs2 = cost0 + width;
  std::uint32_t* subs1 = subs2 + width;
  std::uint32_t* subs0 = subs1 + width;

  cost1[0] = 0;
  subs1[0] = 0;

  const uint32x4_t ones = vdupq_n_u32(1);
  for (std::size_t k = 1; k <= n + m; ++k) {
    if (k <= m) {
      cost0[0] = static_cast<std::uint32_t>(k);
      subs0[0] = 0;
    }
    if (k <= n) {
      cost0[k] = static_cast<std::uint32_t>(k);
      subs0[k] = 0;
    }

    const std::size_t first = std::max<std::size_t>(1, k > m ? k - m : 0);
    const std::size_t last = std::min(n, k - 1);
    std::size_t i = first;
    if (first <= last) {
      for (; i + kLanes - 1 <= last; i += kLanes) {
        const uint32x4_t va = vld1q_u32(ref.data() + i - 1);
        const uint32x4_t vb = vld1q_u32(hyp_rev.data() + (m + i - k));
        const uint32x4_t mismatch = vandq_u32(vmvnq_u32(vceqq_u32(va, vb)), ones);

        const uint32x4_t diag = vaddq_u32(vld1q_u32(cost2 + i - 1), mismatch);
        const uint32x4_t del = vaddq_u32(vld1q_u32(cost1 + i - 1), ones);
        const uint32x4_t ins = vaddq_u32(vld1q_u32(cost1 + i), ones);

        const uint32x4_t not_diag = vorrq_u32(vcgtq_u32(diag, del), vcgtq_u32(diag, ins));
        const uint32x4_t ins_wins = vcgtq_u32(del, ins);

        const uint32x4_t s_diag = vaddq_u32(vld1q_u32(subs2 + i - 1), mismatch);
        const uint32x4_t s_side = vbslq_u32(ins_wins, vld1q_u32(subs1 + i), vld1q_u32(subs1 + i - 1));

        vst1q_u32(cost0 + i, vminq_u32(diag, vminq_u32(del, ins)));
        vst1q_u32(subs0 + i, vbslq_u32(not_diag, s_side, s_diag));
      }
      for (; i <= last; ++i) {
        const std::uint32_t mismatch = ref[i - 1] != hyp_rev[m + i - k] ? 1u : 0u;
        const std::uint32_t diag = cost2[i - 1] + mismatch;
        const std::uint32_t del = cost1[i - 1] + 1;
        const std::uint32_t ins = cost1[i] + 1;
        if (diag <= del && diag <= ins) {
          cost0[i] = diag;
          subs0[i] = subs2[i - 1] + mismatch;
        } else if (del <= ins) {
          cost0[i] = del;
          subs0[i] = subs1[i - 1];
        } else {
          cost0[i] = ins;
          subs0[i] = subs1[i];
        }
      }
    }

    std::uint32_t* t = cost2;
    cost2 = cost1;
    cost1 = cost0;
    cost0 = t;
    t = subs2;
    subs2 = subs1;
    subs1 = subs0;
    subs0 = t;
  }
  return {cost1[n], subs1[n]};
}

}  // namespace arcorpus::kernels
