#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace ecp {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

inline BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline bool is_integer(const Rational& q) {
  return boost::multiprecision::denominator(q) == 1;
}

inline BigInt to_integer(const Rational& q) { return boost::multiprecision::numerator(q); }

inline BigInt pow_int(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline std::string to_string(const BigInt& v) { return v.str(); }
inline std::string to_string(const Rational& v) { return v.str(); }

}  // namespace ecp
