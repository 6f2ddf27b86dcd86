#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsring {

// Typed failure conditions. The CLI maps these onto process exit codes.
enum class errc {
  gcd_not_one,       // generators do not generate a numerical semigroup
  overflow,          // 64-bit arithmetic would wrap, or a generator exceeds the cap
  too_large,         // a table-based operation would exceed the configured table cap
  not_an_element,    // operand is not an element of the semigroup
  not_gorenstein,    // the order formula requires a symmetric semigroup
  wrong_edim,        // operation requires embedding dimension 3
  not_ci_edim3,      // no complete-intersection decomposition exists
  invalid_structure, // decomposition violates its own invariants
  invalid_gluing,    // gluing preconditions (ord > 1, gcd, p >= 2) fail
  invalid_argument,  // malformed input
};

const char* errc_name(errc c) noexcept;

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

// Size caps for table-based operations. Inputs past these limits raise
// Error(too_large) or Error(overflow) instead of allocating unbounded memory
// or wrapping silently.
struct Limits {
  int64_t max_generator = int64_t{1} << 31;
  int64_t max_table = 100'000'000; // entries in any dense table or residue array
};

Limits& limits() noexcept;

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

} // namespace nsring
