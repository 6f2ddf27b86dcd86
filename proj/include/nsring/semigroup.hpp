#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nsring/common.hpp"

namespace nsring {

// Apery set of s: the s least elements of H, one per residue class mod s.
// least[r] is the smallest element congruent to r; order[r] its order.
struct AperyTable {
  int64_t modulus = 0;
  std::vector<int64_t> least;
  std::vector<int32_t> order;

  int64_t max_element() const;
  // elements with their orders, sorted ascending by element
  std::vector<std::pair<int64_t, int32_t>> sorted() const;
};

// View into the cached order table: ord[w] is the order of w (the maximal
// number of generators, counted with multiplicity, summing to w), or
// OrderTable::not_in_h for w outside the semigroup. The span stays valid
// until a larger bound is requested on the same semigroup.
struct OrderTable {
  static constexpr int32_t not_in_h = -1;
  int64_t bound = 0;
  std::span<const int32_t> ord;
};

// A numerical semigroup given by its minimal generating set. Construction
// validates gcd = 1, removes redundant generators and sorts. Invariant
// tables (Apery set of the multiplicity, order table) are cached lazily;
// build them from a single thread per instance, after which concurrent
// reads are safe.
class NumericalSemigroup {
public:
  // Throws Error: invalid_argument (empty or nonpositive input),
  // gcd_not_one, overflow (generator above limits().max_generator).
  static NumericalSemigroup from_generators(std::vector<int64_t> raw);

  const std::vector<int64_t>& generators() const noexcept { return gens_; }
  // raw inputs dropped during minimalization, ascending
  const std::vector<int64_t>& removed_redundant() const noexcept { return dropped_; }

  int64_t multiplicity() const noexcept { return gens_.front(); }
  int edim() const noexcept { return static_cast<int>(gens_.size()); }

  // Frobenius number; -1 when the semigroup is all of N.
  int64_t frobenius() const;
  // number of gaps
  int64_t genus() const;
  bool contains(int64_t w) const;
  bool is_symmetric() const;
  std::vector<int64_t> gaps() const;

  // Throws Error(not_an_element) unless s > 0 and s is an element.
  AperyTable apery_set(int64_t s) const;

  // Order of an element; throws Error(not_an_element) for non-elements.
  int64_t order(int64_t w) const;

  // Order table covering 0..bound at least.
  OrderTable order_table(int64_t bound) const;

  bool operator==(const NumericalSemigroup& o) const noexcept { return gens_ == o.gens_; }

private:
  friend NumericalSemigroup glued_semigroup(std::vector<int64_t> raw, int64_t known_frobenius);
  NumericalSemigroup() = default;

  const std::vector<int64_t>& apery_of_mult() const;

  std::vector<int64_t> gens_;
  std::vector<int64_t> dropped_;
  mutable std::vector<int64_t> apery_mult_; // least element per residue mod a1
  mutable std::vector<int32_t> ord_;        // growable order table
  mutable std::optional<int64_t> frob_;
};

// Family-builder hook: construct from a generator set that is already
// minimal (a gluing of a minimal system stays minimal), with the Frobenius
// number known from the gluing recurrence. Skips minimalization and the
// Apery-based Frobenius computation, so arbitrarily large families stay
// cheap to build.
NumericalSemigroup glued_semigroup(std::vector<int64_t> raw,
                                   int64_t known_frobenius);

// Convenience free functions mirroring the member API.
inline int64_t frobenius(const NumericalSemigroup& h) { return h.frobenius(); }
inline bool contains(const NumericalSemigroup& h, int64_t w) { return h.contains(w); }
inline bool is_symmetric(const NumericalSemigroup& h) { return h.is_symmetric(); }

} // namespace nsring
