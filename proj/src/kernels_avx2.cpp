// AVX2 variants of the table-fill kernels. Compiled with -mavx2 in its own
// TU; only reached through the dispatch table after a cpuid check.

#include <immintrin.h>

#include <algorithm>
#include <cstdint>

#include "kernels_impl.hpp"

namespace nsring::kernels::avx2_impl {

void order_fill(int32_t* ord, int64_t first, int64_t size, const int64_t* gens,
                int n_gens) {
  const int64_t a1 = gens[0];
  const int64_t gmax = gens[n_gens - 1];

  // Entries below gmax need per-element generator bounds; hand them to the
  // reference loop.
  int64_t w = first;
  if (w < gmax) {
    int64_t head_end = std::min(size, gmax);
    scalar_impl::order_fill(ord, w, head_end, gens, n_gens);
    w = head_end;
  }

  const __m256i minus1 = _mm256_set1_epi32(-1);
  while (w < size) {
    // Any block of at most a1 entries only reads entries before the block.
    const int64_t len = std::min(a1, size - w);
    int64_t i = 0;
    for (; i + 8 <= len; i += 8) {
      __m256i acc = minus1;
      for (int k = 0; k < n_gens; ++k) {
        const int32_t* src = ord + (w + i - gens[k]);
        acc = _mm256_max_epi32(
            acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src)));
      }
      // acc is -1 or the best predecessor order; add 1 only when >= 0
      __m256i grew = _mm256_cmpgt_epi32(acc, minus1);
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(ord + w + i),
                          _mm256_sub_epi32(acc, grew));
    }
    for (; i < len; ++i) {
      int32_t best = -1;
      for (int k = 0; k < n_gens; ++k)
        best = std::max(best, ord[w + i - gens[k]]);
      ord[w + i] = best >= 0 ? best + 1 : -1;
    }
    w += len;
  }
}

void sieve_fill(uint8_t* in_h, int64_t first, int64_t size, const int64_t* gens,
                int n_gens) {
  const int64_t a1 = gens[0];
  const int64_t gmax = gens[n_gens - 1];

  int64_t w = first;
  if (w < gmax) {
    int64_t head_end = std::min(size, gmax);
    scalar_impl::sieve_fill(in_h, w, head_end, gens, n_gens);
    w = head_end;
  }

  while (w < size) {
    const int64_t len = std::min(a1, size - w);
    int64_t i = 0;
    for (; i + 32 <= len; i += 32) {
      __m256i acc = _mm256_setzero_si256();
      for (int k = 0; k < n_gens; ++k) {
        const uint8_t* src = in_h + (w + i - gens[k]);
        acc = _mm256_or_si256(
            acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src)));
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(in_h + w + i), acc);
    }
    for (; i < len; ++i) {
      uint8_t hit = 0;
      for (int k = 0; k < n_gens; ++k) hit |= in_h[w + i - gens[k]];
      in_h[w + i] = hit;
    }
    w += len;
  }
}

} // namespace nsring::kernels::avx2_impl
