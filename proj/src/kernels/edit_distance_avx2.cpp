// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <vector>

#include "arcorpus/kernels/edit_distance.hpp"

namespace arcorpus::kernels {

namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const std::uint32_t* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint32_t* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

}  // namespace

// Cells (i, j) with i + j == k form anti-diagonal k and depend only on
// diagonals k-1 and k-2, so each diagonal is one data-parallel sweep over i.
// Diagonals are indexed by i; hyp is reversed so that hyp[k - i - 1] is
// contiguous in i.
AlignmentCost align_avx2(std::span<const Symbol> ref, std::span<const Symbol> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  if (n == 0 || m == 0) {
    return {static_cast<std::uint32_t>(n + m), 0};
  }

  std::vector<std::uint32_t> hyp_rev(hyp.rbegin(), hyp.rend());
  const std::size_t width = n + 1 + kLanes;
  std::vector<std::uint32_t> buf(6 * width, 0);
  std::uint32_t* cost2 = buf.data();  // diagonal k-2
  std::uint32_t* cost1 = cost2 + width;  // diagonal k-1
  std::uint32_t* cost0 = cost1 + width;  // diagonal k
  std::uint32_t* subs2 = cost0 + width;
  std::uint32_t* subs1 = subs2 + width;
  std::uint32_t* subs0 = subs1 + width;

  // Diagonal 0 is the single cell (0, 0).
  cost1[0] = 0;
  subs1[0] = 0;

  const __m256i ones = _mm256_set1_epi32(1);
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
        const __m256i va = load(ref.data() + i - 1);
        const __m256i vb = load(hyp_rev.data() + (m + i - k));
        const __m256i mismatch = _mm256_add_epi32(_mm256_cmpeq_epi32(va, vb), ones);

        const __m256i diag = _mm256_add_epi32(load(cost2 + i - 1), mismatch);
        const __m256i del = _mm256_add_epi32(load(cost1 + i - 1), ones);
        const __m256i ins = _mm256_add_epi32(load(cost1 + i), ones);

        const __m256i not_diag =
            _mm256_or_si256(_mm256_cmpgt_epi32(diag, del), _mm256_cmpgt_epi32(diag, ins));
        const __m256i ins_wins = _mm256_cmpgt_epi32(del, ins);

        const __m256i s_diag = _mm256_add_epi32(load(subs2 + i - 1), mismatch);
        const __m256i s_side = _mm256_blendv_epi8(load(subs1 + i - 1), load(subs1 + i), ins_wins);

        store(cost0 + i, _mm256_min_epu32(diag, _mm256_min_epu32(del, ins)));
        store(subs0 + i, _mm256_blendv_epi8(s_diag, s_side, not_diag));
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
