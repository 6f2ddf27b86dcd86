#pragma once

#include <cstdint>
#include <vector>

#include "nsring/rng.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// One Watanabe gluing H' = <a, pH>: a an element of H of order > 1,
// p >= 2 coprime to a.
struct GluingStep {
  std::vector<int64_t> base_generators;
  int64_t a = 0;
  int64_t p = 0;
};

enum class FamilyKind { watanabe_hna, ding_gap_3gen };

struct FamilySpec {
  FamilyKind kind = FamilyKind::watanabe_hna;
  int64_t n = 1;
  int64_t a = 1; // hna only; must be odd
};

// Glued semigroup, minimalized. Its Frobenius number is recorded from the
// gluing recurrence, so no table is built for it even for large families.
// Throws Error(invalid_gluing) when ord(a) <= 1, gcd(a,p) != 1 or p < 2.
NumericalSemigroup glue(const NumericalSemigroup& base, int64_t a, int64_t p);

// f(H') = p*f(H) + (p-1)*a
int64_t frobenius_glued(const NumericalSemigroup& base, int64_t a, int64_t p);

// H_{n,a} = <2^n, 2^n + a, 2^n + 2a, ..., 2^n + 2^(n-1) a>, a odd, built by
// the inductive gluing <2^n + a, 2 H_{n-1,a}>; the generator set is checked
// against the closed form.
NumericalSemigroup build_hna(int64_t n, int64_t a);

// f(H_{n,a}) = (n-1) 2^n + (2^n - 1) a
int64_t frobenius_hna(int64_t n, int64_t a);

struct HnaExpectation {
  int64_t index;    // n + 1
  int64_t ding_gap; // 2^n - 2n
};
HnaExpectation expected_index_hna(int64_t n, int64_t a);

// <4n, (4n+1)(2n-1), (4n+1)(2n+1)> for n >= 2; its index is 2n+2 and its
// Ding gap 2n-3 grows without bound.
struct DingFamilyInstance {
  NumericalSemigroup semigroup;
  int64_t expected_index;
  int64_t expected_ding_gap;
};
DingFamilyInstance build_ding_family_3gen(int64_t n);

// Random gluing chains for verification corpora: a coprime base pair,
// then up to max_depth gluings with a drawn from low-order elements and p
// a small prime. Chains stop early rather than exceed frobenius_cap.
struct ChainOptions {
  int max_depth = 3;
  int64_t frobenius_cap = 100'000;
  int64_t base_max = 20;
};

struct GluingChain {
  NumericalSemigroup result;
  std::vector<GluingStep> steps;
};

GluingChain random_gluing_chain(Rng& rng, const ChainOptions& opts = {});

} // namespace nsring
