#include "nsring/common.hpp"

namespace nsring {

const char* errc_name(errc c) noexcept {
  switch (c) {
  case errc::gcd_not_one: return "GcdNotOne";
  case errc::overflow: return "Overflow";
  case errc::too_large: return "TooLarge";
  case errc::not_an_element: return "NotAnElement";
  case errc::not_gorenstein: return "NotGorenstein";
  case errc::wrong_edim: return "WrongEdim";
  case errc::not_ci_edim3: return "NotCiEdim3";
  case errc::invalid_structure: return "InvalidStructure";
  case errc::invalid_gluing: return "InvalidGluing";
  case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

void fail(errc code, const std::string& message) { throw Error(code, message); }

Limits& limits() noexcept {
  static Limits l;
  return l;
}

int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::overflow, "integer overflow in addition");
  return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::overflow, "integer overflow in multiplication");
  return r;
}

} // namespace nsring
