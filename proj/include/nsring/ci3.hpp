#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsring/index.hpp"
#include "nsring/semigroup.hpp"

namespace nsring {

// A witness that H = <a, px, py> is a complete intersection of embedding
// dimension 3: gcd(x,y) = gcd(a,p) = 1, p,x,y >= 2, and a lies in <x,y>
// but is not x or y. Decomposition a = a'x + a''y is kept canonical with
// 0 <= a'' < x; x < y is always normalized (the N_b/N_c formulas are
// evaluated under that normalization).
struct CiEdim3Structure {
  int64_t a = 0, b = 0, c = 0; // roles; {a,b,c} is the generator set
  int64_t p = 0, x = 0, y = 0; // b = p*x, c = p*y, x < y
  int64_t a_prime = 0;         // a'
  int64_t a_dprime = 0;        // a'', canonical: 0 <= a'' < x
};

// All valid role assignments. Empty exactly when H is not Gorenstein.
// Throws Error(wrong_edim) unless edim(H) = 3.
std::vector<CiEdim3Structure> detect_ci3(const NumericalSemigroup& h);

// f(H) = pxy + pa - (a + b + c)
int64_t frobenius_ci3(const CiEdim3Structure& s);

// Closed forms for the per-generator N values. The (x, y, a', a'') overload
// of n_formula_a accepts any nonnegative decomposition of a, not only the
// canonical one; all decompositions of the same a give the same value.
int64_t n_formula_a(int64_t x, int64_t y, int64_t a_prime, int64_t a_dprime);
int64_t n_formula_a(const CiEdim3Structure& s);
int64_t n_formula_b(const CiEdim3Structure& s);
int64_t n_formula_c(const CiEdim3Structure& s);

// Special-case index expressions; nullopt when no branch covers the
// structure (a' = 0 with 0 < a'' < p).
std::optional<int64_t> corollary_index(const CiEdim3Structure& s);

// Full report via the closed forms. Throws Error(not_ci_edim3) when
// detect_ci3 finds nothing, Error(wrong_edim) when edim != 3.
IndexReport index_ci3(const NumericalSemigroup& h);

} // namespace nsring
