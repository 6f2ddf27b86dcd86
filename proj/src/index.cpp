#include "nsring/index.hpp"

#include <algorithm>

#include "nsring/ci3.hpp"

namespace nsring {

const char* method_name(IndexMethod m) noexcept {
  switch (m) {
  case IndexMethod::auto_select: return "auto";
  case IndexMethod::apery_oracle: return "apery-oracle";
  case IndexMethod::direct_oracle: return "direct-oracle";
  case IndexMethod::ord_formula: return "ord-formula";
  case IndexMethod::ci3_formula: return "ci3-formula";
  }
  return "?";
}

IndexMethod parse_method(const std::string& name) {
  if (name == "auto") return IndexMethod::auto_select;
  if (name == "apery" || name == "apery-oracle") return IndexMethod::apery_oracle;
  if (name == "direct" || name == "direct-oracle")
    return IndexMethod::direct_oracle;
  if (name == "ord-formula") return IndexMethod::ord_formula;
  if (name == "ci3" || name == "ci3-formula") return IndexMethod::ci3_formula;
  fail(errc::invalid_argument, "unknown method '" + name + "'");
}

int64_t n_value_apery(const NumericalSemigroup& h, int64_t s) {
  AperyTable ap = h.apery_set(s);
  int32_t best = 0;
  for (size_t r = 0; r < ap.least.size(); ++r)
    if (ap.least[r] != 0) best = std::max(best, ap.order[r]);
  return int64_t{best} + 1;
}

int64_t n_value_direct(const NumericalSemigroup& h, int64_t s) {
  if (s <= 0 || !h.contains(s))
    fail(errc::not_an_element,
         std::to_string(s) + " is not a nonzero element of the semigroup");
  // Least i such that every element w <= f+s with ord(w) >= i has w - s in
  // H; elements past f+s satisfy that automatically. Violations at level i
  // are exactly the w with ord(w) >= i and w - s outside H, so the answer
  // is one more than the largest violating order.
  const int64_t bound = checked_add(h.frobenius(), s);
  OrderTable ord = h.order_table(bound);
  int32_t worst = 0;
  for (int64_t w = 1; w <= bound; ++w) {
    int32_t o = ord.ord[static_cast<size_t>(w)];
    if (o >= 0 && o > worst && !h.contains(w - s)) worst = o;
  }
  return int64_t{worst} + 1;
}

int64_t n_value_ord_formula(const NumericalSemigroup& h, int64_t s) {
  if (s <= 0 || !h.contains(s))
    fail(errc::not_an_element,
         std::to_string(s) + " is not a nonzero element of the semigroup");
  if (!h.is_symmetric())
    fail(errc::not_gorenstein,
         "N_s = ord(f+s)+1 requires a symmetric (Gorenstein) semigroup");
  return h.order(checked_add(h.frobenius(), s)) + 1;
}

namespace {

IndexReport report_from_values(const NumericalSemigroup& h,
                               std::vector<std::pair<int64_t, int64_t>> nv,
                               const char* method) {
  IndexReport r;
  r.generators = h.generators();
  r.n_values = std::move(nv);
  r.index = r.n_values.front().second;
  for (const auto& [g, n] : r.n_values) r.index = std::min(r.index, n);
  r.mult = h.multiplicity();
  r.edim = h.edim();
  r.codim = r.edim - 1;
  r.ding_gap = r.mult - r.index - r.codim + 1;
  r.gorenstein = h.is_symmetric();
  r.method = method;
  if (r.gorenstein) r.loewy_length = r.index;
  return r;
}

} // namespace

IndexReport index_report(const NumericalSemigroup& h, IndexMethod method) {
  if (method == IndexMethod::auto_select) {
    if (h.edim() == 3 && !detect_ci3(h).empty()) return index_ci3(h);
    method = IndexMethod::apery_oracle;
  }
  if (method == IndexMethod::ci3_formula) return index_ci3(h);

  int64_t (*nfn)(const NumericalSemigroup&, int64_t) = nullptr;
  switch (method) {
  case IndexMethod::apery_oracle: nfn = n_value_apery; break;
  case IndexMethod::direct_oracle: nfn = n_value_direct; break;
  case IndexMethod::ord_formula: nfn = n_value_ord_formula; break;
  default: fail(errc::invalid_argument, "unhandled method");
  }
  std::vector<std::pair<int64_t, int64_t>> nv;
  nv.reserve(h.generators().size());
  for (int64_t g : h.generators()) nv.emplace_back(g, nfn(h, g));
  return report_from_values(h, std::move(nv), method_name(method));
}

} // namespace nsring
