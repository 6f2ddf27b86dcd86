#include <doctest.h>

#include <numeric>

#include "nsring/family.hpp"
#include "nsring/index.hpp"
#include "oracles.hpp"

using namespace nsring;

namespace {

NumericalSemigroup make(std::vector<int64_t> gens) {
  return NumericalSemigroup::from_generators(std::move(gens));
}

} // namespace

TEST_CASE("gluing produces the expected semigroup") {
  auto base = make({2, 3});
  auto glued = glue(base, 4, 5);
  CHECK(glued.generators() == std::vector<int64_t>{4, 10, 15});
  CHECK(glued.frobenius() == 21);
  CHECK(glued.is_symmetric());

  auto glued2 = glue(base, 5, 4);
  CHECK(glued2.generators() == std::vector<int64_t>{5, 8, 12});
  CHECK(glued2.frobenius() == 19);
  CHECK(oracle::frobenius({5, 8, 12}) == 19);
}

TEST_CASE("gluing rejects bad steps") {
  auto base = make({2, 3});
  CHECK_THROWS_AS(glue(base, 2, 5), Error);  // ord(2) = 1
  CHECK_THROWS_AS(glue(base, 4, 2), Error);  // gcd(4,2) = 2
  CHECK_THROWS_AS(glue(base, 4, 1), Error);  // p < 2
  CHECK_THROWS_AS(glue(base, 1, 5), Error);  // 1 not in <2,3>
  try {
    glue(base, 2, 5);
  } catch (const Error& e) {
    CHECK(e.code() == errc::invalid_gluing);
  }
}

TEST_CASE("gluing from the full semigroup uses f = -1") {
  auto n = make({1});
  for (int64_t a : {2, 3, 5}) {
    for (int64_t p : {2, 3, 7}) {
      if (std::gcd(a, p) != 1) continue;
      CHECK(frobenius_glued(n, a, p) == -p + (p - 1) * a);
      auto glued = glue(n, a, p);
      CHECK(glued.frobenius() == oracle::frobenius(glued.generators()));
    }
  }
}

TEST_CASE("recurrence equals the sieve scan along random chains") {
  Rng rng(2024);
  for (int i = 0; i < 25; ++i) {
    GluingChain chain = random_gluing_chain(rng);
    CHECK(chain.result.frobenius() <= 100'000);
    CHECK(chain.result.is_symmetric());
    CHECK(chain.result.frobenius() ==
          oracle::frobenius(chain.result.generators()));
  }
}

TEST_CASE("glued generator sets are minimal") {
  // glue() trusts minimality of {a} union p*G; re-minimalizing from scratch
  // must change nothing
  Rng rng(314);
  for (int i = 0; i < 20; ++i) {
    GluingChain chain = random_gluing_chain(rng);
    auto redone =
        NumericalSemigroup::from_generators(chain.result.generators());
    CHECK(redone.generators() == chain.result.generators());
    CHECK(redone.removed_redundant().empty());
    CHECK(redone.frobenius() == chain.result.frobenius());
  }
}

TEST_CASE("large families build without tables") {
  // generators near the cap: construction and Frobenius stay cheap because
  // the recurrence is recorded, no residue table is ever built
  auto h = build_hna(30, 1);
  CHECK(h.multiplicity() == int64_t{1} << 30);
  CHECK(h.edim() == 31);
  CHECK(h.frobenius() == frobenius_hna(30, 1));
  CHECK_THROWS_AS(build_hna(31, 1), Error); // 2^31 + a passes the cap
}

TEST_CASE("chains are reproducible from the seed") {
  Rng a(99), b(99);
  for (int i = 0; i < 5; ++i) {
    auto ca = random_gluing_chain(a);
    auto cb = random_gluing_chain(b);
    CHECK(ca.result.generators() == cb.result.generators());
    CHECK(ca.steps.size() == cb.steps.size());
  }
}

TEST_CASE("H_{n,a} construction") {
  CHECK(build_hna(2, 1).generators() == std::vector<int64_t>{4, 5, 6});
  CHECK(build_hna(1, 7).generators() == std::vector<int64_t>{2, 9});
  CHECK(build_hna(3, 3).generators() == std::vector<int64_t>{8, 11, 14, 20});
  CHECK_THROWS_AS(build_hna(2, 4), Error);  // even a
  CHECK_THROWS_AS(build_hna(0, 3), Error);
  CHECK_THROWS_AS(build_hna(2, -1), Error);
}

TEST_CASE("H_{n,a} frobenius closed form") {
  CHECK(frobenius_hna(2, 1) == 7);
  CHECK(frobenius_hna(2, 3) == 13);
  for (int64_t a : {1, 3, 9, 15}) CHECK(frobenius_hna(1, a) == a);

  for (int64_t n = 1; n <= 12; ++n) {
    for (int64_t a = 1; a <= 15; a += 2) {
      NumericalSemigroup h = build_hna(n, a);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(h.edim() == n + 1);
      CHECK(h.multiplicity() == (int64_t{1} << n));
      CHECK(h.frobenius() == frobenius_hna(n, a));
      CHECK(h.is_symmetric());
      if (h.frobenius() <= 20'000)
        CHECK(h.frobenius() == oracle::frobenius(h.generators()));
    }
  }
}

TEST_CASE("H_{n,a} index expectations") {
  CHECK(expected_index_hna(2, 1).index == 3);
  CHECK(expected_index_hna(2, 1).ding_gap == 0);
  CHECK(expected_index_hna(3, 5).index == 4);
  CHECK(expected_index_hna(3, 5).ding_gap == 2);
  CHECK(expected_index_hna(1, 9).index == 2);
  CHECK(expected_index_hna(1, 9).ding_gap == 0);

  for (int64_t n = 1; n <= 5; ++n) {
    for (int64_t a = 1; a <= 9; a += 2) {
      NumericalSemigroup h = build_hna(n, a);
      auto want = expected_index_hna(n, a);
      auto rep = index_report(h, IndexMethod::apery_oracle);
      CAPTURE(n);
      CAPTURE(a);
      CHECK(rep.index == want.index);
      CHECK(rep.ding_gap == want.ding_gap);
    }
  }
}

TEST_CASE("the unbounded-gap 3-generator family") {
  auto inst = build_ding_family_3gen(2);
  CHECK(inst.semigroup.generators() == std::vector<int64_t>{8, 27, 45});
  CHECK(inst.expected_index == 6);
  CHECK(inst.expected_ding_gap == 1);

  auto inst3 = build_ding_family_3gen(3);
  CHECK(inst3.semigroup.generators() == std::vector<int64_t>{12, 65, 91});
  CHECK(inst3.expected_index == 8);
  CHECK(inst3.expected_ding_gap == 3);

  auto inst5 = build_ding_family_3gen(5);
  CHECK(inst5.semigroup.generators() == std::vector<int64_t>{20, 189, 231});
  CHECK(inst5.expected_index == 12);
  CHECK(inst5.expected_ding_gap == 7);

  CHECK_THROWS_AS(build_ding_family_3gen(1), Error);
}
