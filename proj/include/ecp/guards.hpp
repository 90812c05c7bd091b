#pragma once

#include "ecp/error.hpp"

#include <cstdint>
#include <string>

namespace ecp {

/// Size limits shared by the enumeration routines. Exceeding one raises
/// SizeLimit (library) or GuardExceeded (CLI).
struct Guards {
  int max_n = 8;
  /// Bound on enumeration spaces such as (m+1)^n or (2m+1)^n.
  std::uint64_t max_points = 100'000'000;
  /// Bound on S-pairs examined by Buchberger verification.
  std::uint64_t max_spairs = 20'000'000;
  /// Largest n for linear-extension listing.
  int max_extensions_n = 10;
  /// Largest n for building the decorated-permutation complex.
  int max_complex_n = 6;
};

/// base^exp, saturating at UINT64_MAX.
inline std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

inline void require_n(int n, const Guards& g, const char* what) {
  if (n > g.max_n) fail(ErrorCode::SizeLimit, std::string(what) + ": n = " + std::to_string(n) + " exceeds max_n = " + std::to_string(g.max_n));
}

inline void require_points(std::uint64_t points, const Guards& g, const char* what) {
  if (points > g.max_points)
    fail(ErrorCode::SizeLimit, std::string(what) + ": search space " + std::to_string(points) + " exceeds max_points = " + std::to_string(g.max_points));
}

}  // namespace ecp
