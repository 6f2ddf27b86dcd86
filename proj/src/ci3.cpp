#include "nsring/ci3.hpp"

#include <algorithm>
#include <numeric>

namespace nsring {

namespace {

// x^-1 mod m for gcd(x, m) = 1, via extended Euclid.
int64_t mod_inverse(int64_t x, int64_t m) {
  int64_t r0 = m, r1 = x % m, t0 = 0, t1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    t0 -= q * t1;
    std::swap(t0, t1);
  }
  return ((t0 % m) + m) % m;
}

// Shared case split behind N_b and N_c; N_c is N_b with x <-> y and
// a' <-> a'' exchanged.
int64_t n_bc_core(int64_t p, int64_t x, int64_t ap, int64_t app) {
  if (ap != 0 || p < app) return p + x - 1;
  if (app == 0)
    fail(errc::invalid_structure, "a' = a'' = 0 would mean a = 0");
  if (app == p)
    fail(errc::invalid_structure,
         "a' = 0 with a'' = p contradicts gcd(a, p) = 1");
  // a' = 0, a'' < p
  if (x % app == 0) return app + p * (x / app) - 1;
  return p + x - 1 + (p - app) * (x / app);
}

} // namespace

std::vector<CiEdim3Structure> detect_ci3(const NumericalSemigroup& h) {
  if (h.edim() != 3)
    fail(errc::wrong_edim, "complete-intersection detection needs exactly 3 "
                           "minimal generators, got " +
                               std::to_string(h.edim()));
  const auto& g = h.generators();
  std::vector<CiEdim3Structure> out;
  for (int ia = 0; ia < 3; ++ia) {
    CiEdim3Structure s;
    s.a = g[static_cast<size_t>(ia)];
    s.b = g[ia == 0 ? 1 : 0];
    s.c = g[ia == 2 ? 1 : 2]; // b < c since generators are sorted
    s.p = std::gcd(s.b, s.c);
    if (s.p < 2) continue;
    s.x = s.b / s.p;
    s.y = s.c / s.p; // x < y follows from b < c
    if (s.x < 2) continue;
    if (std::gcd(s.a, s.p) != 1) continue;
    if (s.a == s.x || s.a == s.y) continue;
    // a in <x,y>: solve a'' y = a (mod x) with 0 <= a'' < x, then a' >= 0
    s.a_dprime = (s.a % s.x) * mod_inverse(s.y % s.x, s.x) % s.x;
    int64_t rest = s.a - checked_mul(s.a_dprime, s.y);
    if (rest < 0) continue;
    s.a_prime = rest / s.x;
    out.push_back(s);
  }
  return out;
}

int64_t frobenius_ci3(const CiEdim3Structure& s) {
  int64_t pxy = checked_mul(checked_mul(s.p, s.x), s.y);
  int64_t pa = checked_mul(s.p, s.a);
  return checked_add(pxy, pa) - s.a - s.b - s.c;
}

int64_t n_formula_a(int64_t x, int64_t y, int64_t a_prime, int64_t a_dprime) {
  if (a_dprime % x == 0) return x + a_prime + y * (a_dprime / x) - 1;
  return y + a_prime + a_dprime + (y - x) * (a_dprime / x) - 1;
}

int64_t n_formula_a(const CiEdim3Structure& s) {
  return n_formula_a(s.x, s.y, s.a_prime, s.a_dprime);
}

int64_t n_formula_b(const CiEdim3Structure& s) {
  return n_bc_core(s.p, s.x, s.a_prime, s.a_dprime);
}

int64_t n_formula_c(const CiEdim3Structure& s) {
  return n_bc_core(s.p, s.y, s.a_dprime, s.a_prime);
}

std::optional<int64_t> corollary_index(const CiEdim3Structure& s) {
  if (s.a_prime != 0 && s.a_dprime != 0)
    return std::min(s.y + s.a_prime + s.a_dprime - 1, s.p + s.x - 1);
  if (s.a_prime == 0 && s.p < s.a_dprime)
    return std::min(s.y + s.a_dprime - 1, s.p + s.x - 1);
  if (s.a_dprime == 0)
    return std::min(s.p + s.x - 1, s.x + s.a_prime - 1);
  return std::nullopt;
}

IndexReport index_ci3(const NumericalSemigroup& h) {
  auto structures = detect_ci3(h);
  if (structures.empty())
    fail(errc::not_ci_edim3, "semigroup is not a complete intersection");
  const CiEdim3Structure& s = structures.front();

  std::vector<std::pair<int64_t, int64_t>> nv{{s.a, n_formula_a(s)},
                                              {s.b, n_formula_b(s)},
                                              {s.c, n_formula_c(s)}};
  std::sort(nv.begin(), nv.end());

  IndexReport r;
  r.generators = h.generators();
  r.n_values = std::move(nv);
  r.index = std::min({r.n_values[0].second, r.n_values[1].second,
                      r.n_values[2].second});
  r.mult = h.multiplicity();
  r.edim = 3;
  r.codim = 2;
  r.ding_gap = r.mult - r.index - r.codim + 1;
  r.gorenstein = true; // complete intersection
  r.method = method_name(IndexMethod::ci3_formula);
  r.loewy_length = r.index;

  if (auto special = corollary_index(s); special && *special != r.index)
    fail(errc::invalid_structure,
         "special-case index expression disagrees with min{N_a,N_b,N_c}");
  return r;
}

} // namespace nsring
