#pragma once

#include <cstdint>
#include <string>

#include "nsring/json_io.hpp"

namespace nsring {

// Differential verification sweeps: closed forms against the two oracles.
// Each sweep is deterministic in its seed; instances are evaluated by a
// bounded worker pool and failures reported in instance order, so output
// does not depend on the job count.

struct SweepResult {
  std::string name;
  int64_t total = 0;
  int64_t failed = 0;
  json first_counterexample; // null when all passed
  bool ok() const { return failed == 0; }
};

// Self-test hook: deliberately break one formula to prove the harness
// reports counterexamples. Never set outside tests.
enum class Fault { none, n_formula_b_off_by_one };

struct SweepOptions {
  uint64_t seed = 0x5eedc0de;
  int jobs = 0; // 0 = hardware concurrency
  Fault fault = Fault::none;
};

// Random (p,x,y,a) with p,x,y <= 30, a <= 1000: n_formula_{a,b,c} must
// equal both oracles on every generator.
SweepResult sweep_main_theorem(int count, const SweepOptions& opts = {});

// Random gluing chains: the chains are symmetric and N_s = ord(f+s)+1 on
// every generator.
SweepResult sweep_shen_bryant(int count, const SweepOptions& opts = {},
                              int max_depth = 3, int64_t f_cap = 100'000);

// Gluing recurrence f(H') = p f(H) + (p-1)a against a sieve scan.
SweepResult sweep_gluing_frobenius(int count, const SweepOptions& opts = {},
                                   int64_t f_cap = 1'000'000);

// Coprime pairs a < b <= max_gen: index = a = mult, Ding gap 0.
SweepResult sweep_hypersurface(int count, const SweepOptions& opts = {},
                               int64_t max_gen = 500);

// H_{n,a} for n <= max_n, odd a <= max_a: Frobenius formula = sieve scan,
// index = n+1 by the ord formula and by the Apery oracle.
SweepResult sweep_hna(int max_n, int64_t max_a, const SweepOptions& opts = {});

// <4n, (4n+1)(2n-1), (4n+1)(2n+1)> for n in [2, max_n]: index 2n+2 and
// gap 2n-3 by the closed forms and by the Apery oracle.
SweepResult sweep_ding_family(int64_t max_n, const SweepOptions& opts = {});

// Sorted-Apery pairing w_i + w_{s-1-i} = f+s on every generator of every
// symmetric corpus instance (gluing chains).
SweepResult sweep_apery_symmetry(int count, const SweepOptions& opts = {},
                                 int max_depth = 3, int64_t f_cap = 100'000);

// Ding inequality: gap >= 0 on every symmetric non-regular corpus instance.
SweepResult sweep_ding_nonneg(int count, const SweepOptions& opts = {});

} // namespace nsring
