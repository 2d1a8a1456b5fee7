#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hscurves {

/// All quantities in this library are exact integers; the magnitudes appearing
/// in genus/dimension formulas for desk-scale inputs fit comfortably in 64 bits.
using Int = long long;

/// Thrown when an internal consistency check fails (lattice parity, box
/// sufficiency, accounting identities).  CLI maps this to exit code 4.
class invariant_error : public std::logic_error {
 public:
  explicit invariant_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline void check_invariant(bool cond, const std::string& msg) {
  if (!cond) throw invariant_error(msg);
}

/// Binomial coefficient C(n,2)-style helper used throughout the dimension
/// formulas.  Negative n counts as zero conditions.
inline Int binom2(Int n) { return n >= 2 ? n * (n - 1) / 2 : 0; }

/// C(n,k) for the small k that show up here (k <= 2 in practice).
inline Int binom(Int n, Int k) {
  if (k < 0 || n < k) return 0;
  Int num = 1;
  for (Int i = 0; i < k; ++i) num = num * (n - i) / (i + 1);
  return num;
}

/// Exact halving with a parity check; use wherever a formula divides by two.
inline Int half_exact(Int n, const char* context) {
  check_invariant(n % 2 == 0, std::string(context) + ": odd value " + std::to_string(n));
  return n / 2;
}

/// True when the widened-box enumeration self-check is requested.
inline bool debug_wide_box_enabled() {
  const char* v = std::getenv("CENSUS_DEBUG_WIDE_BOX");
  return v != nullptr && v[0] == '1';
}

}  // namespace hscurves
