#pragma once

#include <cstdint>

// Shared between the dispatch TU and the ISA-specific TUs.
namespace nsring::kernels::scalar_impl {
void order_fill(int32_t* ord, int64_t first, int64_t size, const int64_t* gens,
                int n_gens);
void sieve_fill(uint8_t* in_h, int64_t first, int64_t size, const int64_t* gens,
                int n_gens);
} // namespace nsring::kernels::scalar_impl

#if defined(NSRING_HAVE_AVX2)
namespace nsring::kernels::avx2_impl {
void order_fill(int32_t* ord, int64_t first, int64_t size, const int64_t* gens,
                int n_gens);
void sieve_fill(uint8_t* in_h, int64_t first, int64_t size, const int64_t* gens,
                int n_gens);
} // namespace nsring::kernels::avx2_impl
#endif
