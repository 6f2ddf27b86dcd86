#include "nsring/family.hpp"

#include <algorithm>
#include <numeric>

namespace nsring {

int64_t frobenius_glued(const NumericalSemigroup& base, int64_t a, int64_t p) {
  return checked_add(checked_mul(p, base.frobenius()),
                     checked_mul(p - 1, a));
}

namespace {

// ord(a) >= 2 iff a is a sum of two nonzero elements; checking generator
// pairs first avoids building any table when a = g + g' (every inductive
// family step looks like that).
bool order_at_least_two(const NumericalSemigroup& base, int64_t a) {
  const auto& g = base.generators();
  size_t lo = 0, hi = g.size() - 1;
  while (lo <= hi) {
    int64_t s = g[lo] + g[hi];
    if (s == a) return true;
    if (s < a)
      ++lo;
    else if (hi-- == 0)
      break;
  }
  return a > 0 && base.contains(a) && base.order(a) >= 2;
}

} // namespace

NumericalSemigroup glue(const NumericalSemigroup& base, int64_t a, int64_t p) {
  if (p < 2)
    fail(errc::invalid_gluing, "gluing factor p must be at least 2");
  if (std::gcd(a, p) != 1)
    fail(errc::invalid_gluing, "gcd(a, p) = " + std::to_string(std::gcd(a, p)) +
                                   ", gluing needs gcd(a, p) = 1");
  if (a <= 0 || !order_at_least_two(base, a))
    fail(errc::invalid_gluing,
         "gluing element must lie in the base semigroup with order > 1");
  // {a} with p * (minimal system) is again minimal: p cannot divide a, and
  // a relation p*g = alpha*a + ... would force p | alpha, writing the
  // minimal generator g as a sum of two nonzero elements.
  std::vector<int64_t> gens;
  gens.reserve(base.generators().size() + 1);
  gens.push_back(a);
  for (int64_t g : base.generators()) gens.push_back(checked_mul(p, g));
  return glued_semigroup(std::move(gens), frobenius_glued(base, a, p));
}

NumericalSemigroup build_hna(int64_t n, int64_t a) {
  if (n < 1) fail(errc::invalid_argument, "H_{n,a} needs n >= 1");
  if (a < 1 || a % 2 == 0)
    fail(errc::invalid_argument, "H_{n,a} needs a positive odd a");

  NumericalSemigroup h =
      NumericalSemigroup::from_generators({2, checked_add(2, a)});
  int64_t pow2 = 2;
  for (int64_t k = 2; k <= n; ++k) {
    pow2 = checked_mul(pow2, 2);
    h = glue(h, checked_add(pow2, a), 2);
  }

  // <2^n> followed by 2^n + 2^i a; the gluing must reproduce it exactly
  std::vector<int64_t> expected{pow2};
  int64_t step = a;
  for (int64_t i = 0; i < n; ++i) {
    expected.push_back(checked_add(pow2, step));
    step = checked_mul(step, 2);
  }
  std::sort(expected.begin(), expected.end());
  if (h.generators() != expected || !h.removed_redundant().empty())
    fail(errc::invalid_structure,
         "H_{n,a} generators disagree with the closed form");
  return h;
}

int64_t frobenius_hna(int64_t n, int64_t a) {
  if (n < 1 || a < 1 || a % 2 == 0)
    fail(errc::invalid_argument, "H_{n,a} needs n >= 1 and odd a >= 1");
  int64_t pow2 = 1;
  for (int64_t i = 0; i < n; ++i) pow2 = checked_mul(pow2, 2);
  return checked_add(checked_mul(n - 1, pow2), checked_mul(pow2 - 1, a));
}

HnaExpectation expected_index_hna(int64_t n, int64_t a) {
  if (n < 1 || a < 1 || a % 2 == 0)
    fail(errc::invalid_argument, "H_{n,a} needs n >= 1 and odd a >= 1");
  int64_t pow2 = 1;
  for (int64_t i = 0; i < n; ++i) pow2 = checked_mul(pow2, 2);
  return HnaExpectation{n + 1, pow2 - 2 * n};
}

DingFamilyInstance build_ding_family_3gen(int64_t n) {
  if (n < 2) fail(errc::invalid_argument, "the 3-generator family needs n >= 2");
  int64_t p = checked_add(checked_mul(4, n), 1);
  std::vector<int64_t> gens{4 * n, checked_mul(p, 2 * n - 1),
                            checked_mul(p, 2 * n + 1)};
  return DingFamilyInstance{NumericalSemigroup::from_generators(std::move(gens)),
                            2 * n + 2, 2 * n - 3};
}

GluingChain random_gluing_chain(Rng& rng, const ChainOptions& opts) {
  // Base: coprime pair 2 <= u < v <= base_max.
  int64_t u, v;
  do {
    u = rng.uniform(2, opts.base_max - 1);
    v = rng.uniform(u + 1, opts.base_max);
  } while (std::gcd(u, v) != 1);

  GluingChain chain{NumericalSemigroup::from_generators({u, v}), {}};
  static constexpr int64_t primes[] = {2, 3, 5, 7, 11, 13};

  int depth = static_cast<int>(rng.uniform(1, opts.max_depth));
  for (int d = 0; d < depth; ++d) {
    const NumericalSemigroup& base = chain.result;
    // Elements of order >= 2 up to 3f (widened so small bases still have
    // candidates; the smallest is 2 * mult).
    int64_t hi = std::max(3 * base.frobenius(), 2 * base.generators().back());
    std::vector<int64_t> candidates;
    for (int64_t w = 2 * base.multiplicity(); w <= hi; ++w)
      if (base.contains(w) && base.order(w) >= 2) candidates.push_back(w);

    int64_t a = candidates[static_cast<size_t>(
        rng.uniform(0, static_cast<int64_t>(candidates.size()) - 1))];
    int64_t p;
    do {
      p = primes[rng.uniform(0, 5)];
    } while (std::gcd(a, p) != 1);

    if (frobenius_glued(base, a, p) > opts.frobenius_cap) break;
    chain.steps.push_back(GluingStep{base.generators(), a, p});
    chain.result = glue(base, a, p);
  }
  return chain;
}

} // namespace nsring
