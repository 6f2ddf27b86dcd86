#include "nsring/kernels.hpp"

#include <algorithm>
#include <cstdlib>

#include "kernels_impl.hpp"
#include "nsring/common.hpp"

namespace nsring::kernels {

namespace scalar_impl {

void order_fill(int32_t* ord, int64_t first, int64_t size, const int64_t* gens,
                int n_gens) {
  for (int64_t w = first; w < size; ++w) {
    int32_t best = -1;
    for (int i = 0; i < n_gens; ++i) {
      int64_t g = gens[i];
      if (g > w) break; // ascending
      best = std::max(best, ord[w - g]);
    }
    ord[w] = best >= 0 ? best + 1 : -1;
  }
}

void sieve_fill(uint8_t* in_h, int64_t first, int64_t size, const int64_t* gens,
                int n_gens) {
  for (int64_t w = first; w < size; ++w) {
    uint8_t hit = 0;
    for (int i = 0; i < n_gens; ++i) {
      int64_t g = gens[i];
      if (g > w) break;
      hit |= in_h[w - g];
    }
    in_h[w] = hit;
  }
}

} // namespace scalar_impl

const Kernel& scalar() noexcept {
  static const Kernel k{scalar_impl::order_fill, scalar_impl::sieve_fill,
                        "scalar"};
  return k;
}

#if defined(NSRING_HAVE_AVX2)
bool avx2_supported() noexcept { return __builtin_cpu_supports("avx2"); }

const Kernel& avx2() noexcept {
  static const Kernel k{avx2_impl::order_fill, avx2_impl::sieve_fill, "avx2"};
  return k;
}
#else
bool avx2_supported() noexcept { return false; }
const Kernel& avx2() noexcept { return scalar(); }
#endif

namespace {

const Kernel* pick(const std::string& name) {
  if (name == "scalar") return &scalar();
  if (name == "avx2") {
    if (!avx2_supported())
      fail(errc::invalid_argument, "avx2 kernel requested but not supported");
    return &avx2();
  }
  if (name == "auto") return avx2_supported() ? &avx2() : &scalar();
  fail(errc::invalid_argument, "unknown kernel '" + name + "'");
}

const Kernel*& active_slot() noexcept {
  static const Kernel* slot = [] {
    if (const char* env = std::getenv("NSRING_KERNEL")) {
      if (const std::string name = env; name == "scalar" || name == "avx2" ||
                                        name == "auto") {
        try {
          return pick(name);
        } catch (const Error&) {
        }
      }
    }
    return avx2_supported() ? &avx2() : &scalar();
  }();
  return slot;
}

} // namespace

const Kernel& active() noexcept { return *active_slot(); }

void set_active(const std::string& name) { active_slot() = pick(name); }

} // namespace nsring::kernels
