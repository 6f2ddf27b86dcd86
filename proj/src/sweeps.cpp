#include "nsring/sweeps.hpp"

#include <functional>
#include <numeric>

#include "nsring/ci3.hpp"
#include "nsring/family.hpp"
#include "nsring/index.hpp"
#include "nsring/kernels.hpp"
#include "nsring/parallel.hpp"
#include "nsring/rng.hpp"

namespace nsring {

namespace {

// Evaluate check(i) for i in [0, n); null result = pass. Results are
// collected per index, so reports do not depend on the job count.
std::vector<json> parallel_eval(int64_t n, int jobs,
                                const std::function<json(int64_t)>& check) {
  std::vector<json> results(static_cast<size_t>(n));
  parallel_for(n, jobs, [&](int64_t i) {
    try {
      results[static_cast<size_t>(i)] = check(i);
    } catch (const std::exception& e) {
      results[static_cast<size_t>(i)] = json{{"error", e.what()}};
    }
  });
  return results;
}

SweepResult collect(std::string name, std::vector<json> results) {
  SweepResult r;
  r.name = std::move(name);
  r.total = static_cast<int64_t>(results.size());
  for (auto& j : results) {
    if (j.is_null()) continue;
    if (r.failed == 0) r.first_counterexample = std::move(j);
    ++r.failed;
  }
  return r;
}

// True when `claimed` really is the Frobenius number: it is not
// representable, and the mult(H) consecutive values above it all are (so
// everything larger is too). Uses the sieve kernel, independent of the
// Apery machinery.
bool frobenius_checks_out(const NumericalSemigroup& h, int64_t claimed) {
  if (claimed == -1) return h.multiplicity() == 1;
  if (claimed < 1) return false;
  int64_t m = h.multiplicity();
  int64_t size = checked_add(claimed, m) + 1;
  if (size > limits().max_table)
    fail(errc::too_large, "sieve verification window exceeds the table cap");
  std::vector<uint8_t> in_h(static_cast<size_t>(size), 0);
  in_h[0] = 1;
  kernels::active().sieve_fill(in_h.data(), 1, size, h.generators().data(),
                               h.edim());
  if (in_h[static_cast<size_t>(claimed)]) return false;
  for (int64_t w = claimed + 1; w < size; ++w)
    if (!in_h[static_cast<size_t>(w)]) return false;
  return true;
}

json chain_json(const GluingChain& chain) {
  json steps = json::array();
  for (const auto& s : chain.steps) steps.push_back(to_json(s));
  return json{{"steps", std::move(steps)},
              {"generators", chain.result.generators()}};
}

std::vector<GluingChain> make_chain_corpus(uint64_t seed, int count,
                                           int max_depth, int64_t f_cap) {
  Rng rng(seed);
  ChainOptions opts;
  opts.max_depth = max_depth;
  opts.frobenius_cap = f_cap;
  std::vector<GluingChain> corpus;
  corpus.reserve(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i) corpus.push_back(random_gluing_chain(rng, opts));
  return corpus;
}

struct Ci3Params {
  int64_t p, x, y, a;
};

std::vector<Ci3Params> make_ci3_corpus(uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<Ci3Params> out;
  out.reserve(static_cast<size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    int64_t x, y;
    do {
      x = rng.uniform(2, 29);
      y = rng.uniform(x + 1, 30);
    } while (std::gcd(x, y) != 1);
    int64_t p = rng.uniform(2, 30);
    for (int attempt = 0; attempt < 64; ++attempt) {
      int64_t ap = rng.uniform(0, 1000 / x);
      int64_t app = rng.uniform(0, x - 1);
      if (ap + app < 2) continue;
      int64_t a = ap * x + app * y;
      if (a > 1000 || std::gcd(a, p) != 1) continue;
      out.push_back(Ci3Params{p, x, y, a});
      break;
    }
  }
  return out;
}

} // namespace

SweepResult sweep_main_theorem(int count, const SweepOptions& opts) {
  auto corpus = make_ci3_corpus(opts.seed, count);
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    const auto& [p, x, y, a] = corpus[static_cast<size_t>(i)];
    json inst{{"p", p}, {"x", x}, {"y", y}, {"a", a}};
    auto h = NumericalSemigroup::from_generators({a, p * x, p * y});
    if (h.edim() != 3)
      return json{{"instance", inst}, {"error", "not minimally 3-generated"}};
    const CiEdim3Structure* s = nullptr;
    auto structures = detect_ci3(h);
    for (const auto& cand : structures)
      if (cand.a == a && cand.p == p) s = &cand;
    if (!s) return json{{"instance", inst}, {"error", "structure not detected"}};

    std::pair<int64_t, int64_t> formula[3] = {
        {s->a, n_formula_a(*s)}, {s->b, n_formula_b(*s)}, {s->c, n_formula_c(*s)}};
    if (opts.fault == Fault::n_formula_b_off_by_one) formula[1].second += 1;

    for (const auto& [gen, nf] : formula) {
      int64_t na = n_value_apery(h, gen);
      int64_t nd = n_value_direct(h, gen);
      if (nf != na || na != nd)
        return json{{"instance", inst},
                    {"generator", gen},
                    {"formula", nf},
                    {"apery_oracle", na},
                    {"direct_oracle", nd}};
    }
    return json();
  });
  return collect("main-theorem", std::move(results));
}

SweepResult sweep_shen_bryant(int count, const SweepOptions& opts, int max_depth,
                              int64_t f_cap) {
  auto corpus = make_chain_corpus(opts.seed, count, max_depth, f_cap);
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    const auto& chain = corpus[static_cast<size_t>(i)];
    const NumericalSemigroup& h = chain.result;
    if (!h.is_symmetric())
      return json{{"chain", chain_json(chain)}, {"error", "glued semigroup not symmetric"}};
    int64_t f = h.frobenius();
    for (int64_t s : h.generators()) {
      int64_t ns = n_value_apery(h, s);
      int64_t of = h.order(f + s) + 1;
      if (ns != of)
        return json{{"chain", chain_json(chain)},
                    {"generator", s},
                    {"n_value", ns},
                    {"ord_formula", of}};
    }
    return json();
  });
  return collect("shen-bryant", std::move(results));
}

SweepResult sweep_gluing_frobenius(int count, const SweepOptions& opts,
                                   int64_t f_cap) {
  auto corpus = make_chain_corpus(opts.seed, count, 3, f_cap);
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    const auto& chain = corpus[static_cast<size_t>(i)];
    // Replay the chain, checking the recurrence value after every step.
    NumericalSemigroup h =
        NumericalSemigroup::from_generators(chain.steps.empty()
                                                ? chain.result.generators()
                                                : chain.steps.front().base_generators);
    for (const auto& step : chain.steps) {
      int64_t claimed = frobenius_glued(h, step.a, step.p);
      h = glue(h, step.a, step.p);
      if (h.frobenius() != claimed || !frobenius_checks_out(h, claimed))
        return json{{"chain", chain_json(chain)},
                    {"step", to_json(step)},
                    {"claimed_frobenius", claimed}};
    }
    return json();
  });
  return collect("gluing-frobenius", std::move(results));
}

SweepResult sweep_hypersurface(int count, const SweepOptions& opts,
                               int64_t max_gen) {
  Rng rng(opts.seed);
  std::vector<std::pair<int64_t, int64_t>> pairs;
  pairs.reserve(static_cast<size_t>(count));
  while (static_cast<int>(pairs.size()) < count) {
    int64_t a = rng.uniform(2, max_gen - 1);
    int64_t b = rng.uniform(a + 1, max_gen);
    if (std::gcd(a, b) == 1) pairs.emplace_back(a, b);
  }
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    auto [a, b] = pairs[static_cast<size_t>(i)];
    auto h = NumericalSemigroup::from_generators({a, b});
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    if (rep.index != a || rep.mult != a || rep.ding_gap != 0)
      return json{{"a", a}, {"b", b}, {"report", to_json(rep)}};
    return json();
  });
  return collect("hypersurface", std::move(results));
}

SweepResult sweep_hna(int max_n, int64_t max_a, const SweepOptions& opts) {
  std::vector<std::pair<int64_t, int64_t>> insts;
  for (int64_t n = 1; n <= max_n; ++n)
    for (int64_t a = 1; a <= max_a; a += 2) insts.emplace_back(n, a);
  auto results = parallel_eval(static_cast<int64_t>(insts.size()), opts.jobs,
                               [&](int64_t i) -> json {
    auto [n, a] = insts[static_cast<size_t>(i)];
    json inst{{"n", n}, {"a", a}};
    NumericalSemigroup h = build_hna(n, a);
    int64_t f_formula = frobenius_hna(n, a);
    if (h.frobenius() != f_formula || !frobenius_checks_out(h, f_formula))
      return json{{"instance", inst},
                  {"frobenius_formula", f_formula},
                  {"frobenius", h.frobenius()}};
    HnaExpectation want = expected_index_hna(n, a);
    IndexReport by_ord = index_report(h, IndexMethod::ord_formula);
    IndexReport by_apery = index_report(h, IndexMethod::apery_oracle);
    if (by_ord.index != want.index || by_apery.index != want.index ||
        by_ord.ding_gap != want.ding_gap || by_apery.ding_gap != want.ding_gap)
      return json{{"instance", inst},
                  {"expected_index", want.index},
                  {"expected_ding_gap", want.ding_gap},
                  {"ord_formula", to_json(by_ord)},
                  {"apery", to_json(by_apery)}};
    return json();
  });
  return collect("hna", std::move(results));
}

SweepResult sweep_ding_family(int64_t max_n, const SweepOptions& opts) {
  int64_t count = std::max<int64_t>(0, max_n - 1);
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    int64_t n = i + 2;
    DingFamilyInstance inst = build_ding_family_3gen(n);
    const NumericalSemigroup& h = inst.semigroup;
    IndexReport by_ci3 = index_ci3(h);
    IndexReport by_apery = index_report(h, IndexMethod::apery_oracle);
    auto structures = detect_ci3(h);
    bool frob_ok = !structures.empty() &&
                   frobenius_ci3(structures.front()) == h.frobenius();
    if (!frob_ok || by_ci3.index != inst.expected_index ||
        by_apery.index != inst.expected_index ||
        by_ci3.ding_gap != inst.expected_ding_gap ||
        by_apery.ding_gap != inst.expected_ding_gap)
      return json{{"n", n},
                  {"generators", h.generators()},
                  {"expected_index", inst.expected_index},
                  {"expected_ding_gap", inst.expected_ding_gap},
                  {"ci3", to_json(by_ci3)},
                  {"apery", to_json(by_apery)}};
    return json();
  });
  return collect("ding-family", std::move(results));
}

SweepResult sweep_apery_symmetry(int count, const SweepOptions& opts,
                                 int max_depth, int64_t f_cap) {
  auto corpus = make_chain_corpus(opts.seed, count, max_depth, f_cap);
  auto results = parallel_eval(count, opts.jobs, [&](int64_t i) -> json {
    const auto& chain = corpus[static_cast<size_t>(i)];
    const NumericalSemigroup& h = chain.result;
    if (!h.is_symmetric())
      return json{{"chain", chain_json(chain)}, {"error", "not symmetric"}};
    int64_t f = h.frobenius();
    for (int64_t s : h.generators()) {
      auto sorted = h.apery_set(s).sorted();
      for (size_t k = 0; k < sorted.size(); ++k) {
        int64_t lo = sorted[k].first;
        int64_t hi = sorted[sorted.size() - 1 - k].first;
        if (lo + hi != f + s)
          return json{{"chain", chain_json(chain)},
                      {"generator", s},
                      {"i", k},
                      {"w_i", lo},
                      {"w_rev", hi},
                      {"expected_sum", f + s}};
      }
    }
    return json();
  });
  return collect("apery-symmetry", std::move(results));
}

SweepResult sweep_ding_nonneg(int count, const SweepOptions& opts) {
  // Symmetric corpus: gluing chains plus the closed-form families.
  std::vector<NumericalSemigroup> corpus;
  for (auto& chain : make_chain_corpus(opts.seed, count, 3, 100'000))
    corpus.push_back(std::move(chain.result));
  for (int64_t n = 1; n <= 6; ++n)
    for (int64_t a = 1; a <= 9; a += 2) corpus.push_back(build_hna(n, a));
  for (int64_t n = 2; n <= 6; ++n)
    corpus.push_back(build_ding_family_3gen(n).semigroup);
  auto results = parallel_eval(static_cast<int64_t>(corpus.size()), opts.jobs,
                               [&](int64_t i) -> json {
    const NumericalSemigroup& h = corpus[static_cast<size_t>(i)];
    if (!h.is_symmetric() || h.generators() == std::vector<int64_t>{1})
      return json();
    IndexReport rep = index_report(h, IndexMethod::apery_oracle);
    if (rep.ding_gap < 0)
      return json{{"generators", h.generators()}, {"report", to_json(rep)}};
    return json();
  });
  return collect("ding-nonneg", std::move(results));
}

} // namespace nsring
