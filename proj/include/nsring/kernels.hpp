#pragma once

#include <cstdint>
#include <string>

namespace nsring::kernels {

// Dense dynamic-programming fills over a window of consecutive values.
// Both recurrences only look back at least gens[0] positions, so any block
// of up to gens[0] consecutive entries depends solely on entries before the
// block. That makes the inner loop an elementwise shifted max/or, which the
// AVX2 variants exploit; the scalar variants are the reference semantics.
//
// order_fill: ord[w] = -1 if w has no representation over gens, else the
// maximal coefficient sum of a representation. Requires ord[0..first-1]
// already filled (ord[0] = 0) and gens sorted ascending, all >= 1.
using OrderFillFn = void (*)(int32_t* ord, int64_t first, int64_t size,
                             const int64_t* gens, int n_gens);

// sieve_fill: in_h[w] = 1 iff w is representable. Same window contract.
using SieveFillFn = void (*)(uint8_t* in_h, int64_t first, int64_t size,
                             const int64_t* gens, int n_gens);

struct Kernel {
  OrderFillFn order_fill;
  SieveFillFn sieve_fill;
  const char* name;
};

const Kernel& scalar() noexcept;
bool avx2_supported() noexcept;
const Kernel& avx2() noexcept; // only call when avx2_supported()

// Active kernel: avx2 when the CPU has it, else scalar. The NSRING_KERNEL
// environment variable ("scalar", "avx2", "auto") or set_active() overrides.
const Kernel& active() noexcept;
void set_active(const std::string& name); // throws Error(invalid_argument)

} // namespace nsring::kernels
