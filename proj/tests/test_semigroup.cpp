#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "nsring/rng.hpp"
#include "nsring/semigroup.hpp"
#include "oracles.hpp"

using namespace nsring;

namespace {

struct LimitsGuard {
  Limits saved = limits();
  ~LimitsGuard() { limits() = saved; }
};

NumericalSemigroup make(std::vector<int64_t> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

// random numerical semigroup with small generators, gcd 1
NumericalSemigroup random_small(Rng& rng, int64_t max_gen = 20) {
  for (;;) {
    std::vector<int64_t> gens;
    int n = static_cast<int>(rng.uniform(2, 4));
    for (int i = 0; i < n; ++i) gens.push_back(rng.uniform(2, max_gen));
    int64_t d = 0;
    for (int64_t g : gens) d = std::gcd(d, g);
    if (d == 1) return make(gens);
  }
}

} // namespace

TEST_CASE("minimalization keeps exactly the minimal system") {
  auto h = make({2, 3, 4});
  CHECK(h.generators() == std::vector<int64_t>{2, 3});
  CHECK(h.removed_redundant() == std::vector<int64_t>{4});

  CHECK(make({4, 10, 15}).generators() == std::vector<int64_t>{4, 10, 15});
  CHECK(make({4, 5, 11}).generators() == std::vector<int64_t>{4, 5, 11});
  CHECK(make({1, 5, 9}).generators() == std::vector<int64_t>{1});
  CHECK(make({6, 9, 20, 26, 35}).generators() ==
        oracle::min_generators({6, 9, 20, 26, 35}));
}

TEST_CASE("minimalization agrees with the splitting oracle") {
  Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    std::vector<int64_t> raw;
    int n = static_cast<int>(rng.uniform(2, 6));
    for (int k = 0; k < n; ++k) raw.push_back(rng.uniform(2, 40));
    int64_t d = 0;
    for (int64_t g : raw) d = std::gcd(d, g);
    if (d != 1) continue;
    CAPTURE(raw);
    CHECK(make(raw).generators() == oracle::min_generators(raw));
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(make({6, 10}), Error);
  try {
    make({6, 10});
  } catch (const Error& e) {
    CHECK(e.code() == errc::gcd_not_one);
  }
  CHECK_THROWS_AS(make({}), Error);
  CHECK_THROWS_AS(make({0, 3}), Error);
  CHECK_THROWS_AS(make({-2, 3}), Error);
  try {
    make({(int64_t{1} << 31) + 1, 2});
  } catch (const Error& e) {
    CHECK(e.code() == errc::overflow);
  }
}

TEST_CASE("frobenius numbers") {
  CHECK(make({4, 5, 11}).frobenius() == 7);
  CHECK(make({4, 5, 6}).frobenius() == 7);
  CHECK(make({2, 3}).frobenius() == 1);
  CHECK(make({1}).frobenius() == -1);
  CHECK(make({9, 10, 15}).frobenius() == 41);
  CHECK(make({10, 14, 21}).frobenius() == 67);
  CHECK(make({8, 27, 45}).frobenius() == 127);
}

TEST_CASE("membership matches the boolean sieve") {
  std::vector<std::vector<int64_t>> cases = {
      {4, 5, 11}, {4, 10, 15}, {2, 3}, {8, 27, 45}, {5, 8, 12}, {9, 10, 15}};
  for (const auto& gens : cases) {
    auto h = make(gens);
    int64_t bound = h.frobenius() + 2 * gens.back();
    auto in = oracle::sieve(gens, bound);
    for (int64_t w = 0; w <= bound; ++w) {
      CAPTURE(gens[0]);
      CAPTURE(w);
      CHECK(h.contains(w) == (in[static_cast<size_t>(w)] != 0));
    }
    CHECK_FALSE(h.contains(-3));
  }
  CHECK(make({4, 5, 11}).contains(10));
  CHECK_FALSE(make({4, 5, 11}).contains(7));
  CHECK(make({4, 5, 11}).contains(0));
  CHECK(make({1}).contains(123456));
}

TEST_CASE("apery sets") {
  auto h = make({4, 5, 11});
  AperyTable t = h.apery_set(4);
  CHECK(t.modulus == 4);
  CHECK(t.least == std::vector<int64_t>{0, 5, 10, 11});
  CHECK(t.order == std::vector<int32_t>{0, 1, 2, 1});
  CHECK(t.max_element() == h.frobenius() + 4);

  CHECK(make({2, 3}).apery_set(2).least == std::vector<int64_t>{0, 3});
  CHECK(make({4, 10, 15}).apery_set(4).max_element() == 21 + 4);

  CHECK_THROWS_AS(h.apery_set(0), Error);
  CHECK_THROWS_AS(h.apery_set(7), Error);  // 7 is a gap
  CHECK_THROWS_AS(h.apery_set(-4), Error);
}

TEST_CASE("apery invariants on random semigroups and moduli") {
  Rng rng(11);
  for (int i = 0; i < 25; ++i) {
    auto h = random_small(rng);
    int64_t f = h.frobenius();
    // pick an element, generator or not
    int64_t s = 0;
    while (s == 0) {
      int64_t cand = rng.uniform(1, std::max<int64_t>(f + 25, 25));
      if (h.contains(cand)) s = cand;
    }
    AperyTable t = h.apery_set(s);
    REQUIRE(t.least.size() == static_cast<size_t>(s));
    CHECK(t.least[0] == 0);
    CHECK(t.order[0] == 0);
    CHECK(t.max_element() == f + s);
    auto in = oracle::sieve(h.generators(), f + s);
    auto expect = oracle::apery(h.generators(), s);
    for (int64_t r = 0; r < s; ++r) {
      int64_t w = t.least[static_cast<size_t>(r)];
      CHECK(w == expect[static_cast<size_t>(r)]);
      CHECK(w % s == r);
      // the defining property: w in H, w - s not in H
      bool wms = w - s >= 0 && in[static_cast<size_t>(w - s)] != 0;
      CHECK_FALSE(wms);
    }
  }
}

TEST_CASE("order values and errors") {
  auto h = make({4, 5, 11});
  CHECK(h.order(11) == 1);
  CHECK(h.order(0) == 0);
  CHECK(h.order(10) == 2);
  CHECK(make({4, 7, 10}).order(20) == 5);
  CHECK_THROWS_AS(h.order(7), Error);
  CHECK_THROWS_AS(h.order(-1), Error);
  for (int64_t g : h.generators()) CHECK(h.order(g) == 1);
}

TEST_CASE("order DP equals exhaustive enumeration") {
  Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    auto h = random_small(rng, 20);
    for (int64_t w = 0; w <= 60; ++w) {
      int64_t expect = oracle::order_enum(h.generators(), w);
      CAPTURE(h.generators()[0]);
      CAPTURE(w);
      if (expect < 0)
        CHECK_FALSE(h.contains(w));
      else
        CHECK(h.order(w) == expect);
    }
  }
}

TEST_CASE("order is superadditive") {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    auto h = random_small(rng);
    int64_t f = h.frobenius();
    for (int k = 0; k < 40; ++k) {
      int64_t u = rng.uniform(0, f + 30);
      int64_t v = rng.uniform(0, f + 30);
      if (!h.contains(u) || !h.contains(v)) continue;
      CHECK(h.order(u + v) >= h.order(u) + h.order(v));
    }
  }
}

TEST_CASE("symmetry flag") {
  CHECK_FALSE(make({4, 5, 11}).is_symmetric());
  CHECK(make({8, 27, 45}).is_symmetric());
  CHECK(make({2, 3}).is_symmetric());
  CHECK(make({1}).is_symmetric());
  CHECK(make({4, 10, 15}).is_symmetric());

  // definitional scan: s in H iff f - s not in H
  Rng rng(47);
  for (int i = 0; i < 30; ++i) {
    auto h = random_small(rng);
    int64_t f = h.frobenius();
    bool sym = true;
    for (int64_t s = 0; s <= f && sym; ++s)
      sym = h.contains(s) == !h.contains(f - s);
    CAPTURE(h.generators()[0]);
    CHECK(h.is_symmetric() == sym);
  }
}

TEST_CASE("sorted apery of a symmetric semigroup pairs up to f+s") {
  for (int64_t s : {4, 10, 15, 8}) {
    auto h = make({4, 10, 15});
    auto sorted = h.apery_set(s).sorted();
    for (size_t i = 0; i < sorted.size(); ++i)
      CHECK(sorted[i].first + sorted[sorted.size() - 1 - i].first ==
            h.frobenius() + s);
  }
  // and fails on the non-symmetric <4,5,11>
  auto h = make({4, 5, 11});
  auto sorted = h.apery_set(4).sorted();
  bool all = true;
  for (size_t i = 0; i < sorted.size(); ++i)
    all = all && sorted[i].first + sorted[sorted.size() - 1 - i].first ==
                     h.frobenius() + 4;
  CHECK_FALSE(all);
}

TEST_CASE("gaps") {
  CHECK(make({2, 3}).gaps() == std::vector<int64_t>{1});
  CHECK(make({4, 5, 11}).gaps() == std::vector<int64_t>{1, 2, 3, 6, 7});
  CHECK(make({1}).gaps().empty());
  Rng rng(53);
  for (int i = 0; i < 15; ++i) {
    auto h = random_small(rng);
    auto gs = h.gaps();
    CHECK(gs == oracle::gaps(h.generators()));
    CHECK(static_cast<int64_t>(gs.size()) == h.genus());
    if (!gs.empty()) CHECK(gs.back() == h.frobenius());
  }
}

TEST_CASE("size caps produce TooLarge") {
  LimitsGuard guard;
  limits().max_table = 100;
  auto h = make({3, 5});  // small: fine
  CHECK(h.frobenius() == 7);
  try {
    make({20011, 20012}); // needs a residue table of 20011 entries
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
  try {
    (void)h.order_table(5000);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::too_large);
  }
}
