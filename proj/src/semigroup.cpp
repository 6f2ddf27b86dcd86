#include "nsring/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "nsring/kernels.hpp"

namespace nsring {

namespace {

constexpr int64_t kUnreachable = std::numeric_limits<int64_t>::max();

// Least representable value in each residue class mod `modulus`: Dijkstra
// on the residue graph with one edge of weight g per generator. Classes the
// monoid misses (possible while gcd > 1 during minimalization) stay at
// kUnreachable.
std::vector<int64_t> least_per_residue(const std::vector<int64_t>& gens,
                                       int64_t modulus) {
  if (modulus > limits().max_table)
    fail(errc::too_large, "residue table of size " + std::to_string(modulus) +
                              " exceeds the configured cap");
  std::vector<int64_t> dist(static_cast<size_t>(modulus), kUnreachable);
  using Node = std::pair<int64_t, int64_t>; // (value, residue)
  std::priority_queue<Node, std::vector<Node>, std::greater<>> heap;
  dist[0] = 0;
  heap.emplace(0, 0);
  while (!heap.empty()) {
    auto [d, r] = heap.top();
    heap.pop();
    if (d != dist[static_cast<size_t>(r)]) continue;
    for (int64_t g : gens) {
      int64_t nr = (r + g) % modulus;
      int64_t nd = checked_add(d, g);
      if (nd < dist[static_cast<size_t>(nr)]) {
        dist[static_cast<size_t>(nr)] = nd;
        heap.emplace(nd, nr);
      }
    }
  }
  return dist;
}

bool member_of(const std::vector<int64_t>& gens, int64_t w) {
  if (w < 0) return false;
  if (w == 0) return true;
  int64_t m = gens.front();
  if (m == 1) return true;
  auto dist = least_per_residue(gens, m);
  return dist[static_cast<size_t>(w % m)] <= w;
}

} // namespace

int64_t AperyTable::max_element() const {
  return *std::max_element(least.begin(), least.end());
}

std::vector<std::pair<int64_t, int32_t>> AperyTable::sorted() const {
  std::vector<std::pair<int64_t, int32_t>> out;
  out.reserve(least.size());
  for (size_t r = 0; r < least.size(); ++r) out.emplace_back(least[r], order[r]);
  std::sort(out.begin(), out.end());
  return out;
}

NumericalSemigroup NumericalSemigroup::from_generators(std::vector<int64_t> raw) {
  if (raw.empty())
    fail(errc::invalid_argument, "generator list is empty");
  for (int64_t g : raw) {
    if (g <= 0)
      fail(errc::invalid_argument,
           "generators must be positive, got " + std::to_string(g));
    if (g > limits().max_generator)
      fail(errc::overflow, "generator " + std::to_string(g) +
                               " exceeds the cap " +
                               std::to_string(limits().max_generator));
  }
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  int64_t d = 0;
  for (int64_t g : raw) d = std::gcd(d, g);
  if (d != 1)
    fail(errc::gcd_not_one, "gcd of generators is " + std::to_string(d) +
                                ", not a numerical semigroup");

  NumericalSemigroup h;
  for (int64_t g : raw) {
    // Ascending order makes this the unique minimal generating system: a
    // redundant g is a combination of strictly smaller accepted elements.
    if (h.gens_.empty() || !member_of(h.gens_, g))
      h.gens_.push_back(g);
    else
      h.dropped_.push_back(g);
  }
  return h;
}

NumericalSemigroup glued_semigroup(std::vector<int64_t> raw,
                                   int64_t known_frobenius) {
  for (int64_t g : raw)
    if (g > limits().max_generator)
      fail(errc::overflow, "generator " + std::to_string(g) +
                               " exceeds the cap " +
                               std::to_string(limits().max_generator));
  std::sort(raw.begin(), raw.end());
  NumericalSemigroup h;
  h.gens_ = std::move(raw);
  h.frob_ = known_frobenius;
  return h;
}

const std::vector<int64_t>& NumericalSemigroup::apery_of_mult() const {
  if (apery_mult_.empty())
    apery_mult_ = least_per_residue(gens_, multiplicity());
  return apery_mult_;
}

int64_t NumericalSemigroup::frobenius() const {
  if (!frob_) {
    const auto& ap = apery_of_mult();
    frob_ = *std::max_element(ap.begin(), ap.end()) - multiplicity();
  }
  return *frob_;
}

int64_t NumericalSemigroup::genus() const {
  const auto& ap = apery_of_mult();
  int64_t m = multiplicity();
  int64_t g = 0;
  for (int64_t r = 0; r < m; ++r) g += (ap[static_cast<size_t>(r)] - r) / m;
  return g;
}

bool NumericalSemigroup::contains(int64_t w) const {
  if (w < 0) return false;
  if (w == 0) return true;
  const auto& ap = apery_of_mult();
  return w >= ap[static_cast<size_t>(w % multiplicity())];
}

bool NumericalSemigroup::is_symmetric() const {
  // The reflection s -> f - s injects the elements below f into the gaps,
  // so genus >= (f+1)/2 always, with equality exactly for symmetric H.
  return 2 * genus() == frobenius() + 1;
}

std::vector<int64_t> NumericalSemigroup::gaps() const {
  const auto& ap = apery_of_mult();
  int64_t m = multiplicity();
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(genus()));
  for (int64_t r = 1; r < m; ++r)
    for (int64_t v = r; v < ap[static_cast<size_t>(r)]; v += m) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

OrderTable NumericalSemigroup::order_table(int64_t bound) const {
  if (bound < 0) fail(errc::invalid_argument, "negative order-table bound");
  if (bound + 1 > limits().max_table)
    fail(errc::too_large, "order table of size " + std::to_string(bound + 1) +
                              " exceeds the configured cap");
  int64_t have = static_cast<int64_t>(ord_.size());
  if (have < bound + 1) {
    ord_.resize(static_cast<size_t>(bound + 1));
    int64_t first = have;
    if (first == 0) {
      ord_[0] = 0;
      first = 1;
    }
    kernels::active().order_fill(ord_.data(), first, bound + 1, gens_.data(),
                                 edim());
  }
  return OrderTable{bound, std::span<const int32_t>(ord_.data(),
                                                    static_cast<size_t>(bound + 1))};
}

int64_t NumericalSemigroup::order(int64_t w) const {
  if (w < 0 || !contains(w))
    fail(errc::not_an_element,
         std::to_string(w) + " is not an element of the semigroup");
  return order_table(w).ord[static_cast<size_t>(w)];
}

AperyTable NumericalSemigroup::apery_set(int64_t s) const {
  if (s <= 0 || !contains(s))
    fail(errc::not_an_element, "Apery modulus " + std::to_string(s) +
                                   " is not a nonzero element of the semigroup");
  AperyTable t;
  t.modulus = s;
  t.least = least_per_residue(gens_, s);
  auto ord = order_table(checked_add(frobenius(), s));
  t.order.reserve(static_cast<size_t>(s));
  for (int64_t w : t.least)
    t.order.push_back(ord.ord[static_cast<size_t>(w)]);
  return t;
}

} // namespace nsring
