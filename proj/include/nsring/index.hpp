#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsring/semigroup.hpp"

namespace nsring {

enum class IndexMethod {
  auto_select,  // ci3 formulas when they apply, else the Apery oracle
  apery_oracle, // N_s = 1 + max order over nonzero Apery elements of s
  direct_oracle,// N_s = least i with m^i contained in (t^s), by scan
  ord_formula,  // N_s = ord(f+s) + 1; requires a symmetric semigroup
  ci3_formula,  // closed forms for complete intersections of edim 3
};

const char* method_name(IndexMethod m) noexcept; // "apery-oracle", ...
IndexMethod parse_method(const std::string& name); // also accepts "auto", "ci3"

struct IndexReport {
  std::vector<int64_t> generators;
  std::vector<std::pair<int64_t, int64_t>> n_values; // (generator, N), ascending
  int64_t index = 0;
  int64_t mult = 0;
  int edim = 0;
  int codim = 0; // edim - 1: these rings are one-dimensional
  int64_t ding_gap = 0; // mult - index - codim + 1
  bool gorenstein = false;
  std::string method;

  // equals index for Gorenstein semigroup rings; absent otherwise
  std::optional<int64_t> loewy_length;
};

int64_t n_value_apery(const NumericalSemigroup& h, int64_t s);
int64_t n_value_direct(const NumericalSemigroup& h, int64_t s);
int64_t n_value_ord_formula(const NumericalSemigroup& h, int64_t s);

IndexReport index_report(const NumericalSemigroup& h,
                         IndexMethod method = IndexMethod::auto_select);

inline int64_t ding_gap(const IndexReport& r) {
  return r.mult - r.index - r.codim + 1;
}

} // namespace nsring
