#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace padic_fixvec {

using BigInt = boost::multiprecision::cpp_int;

/// base^exp for exp >= 0.
inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

/// Saturating conversion, used for budget arithmetic.
inline std::uint64_t saturate_u64(const BigInt& v) {
  if (v < 0) return 0;
  if (v > BigInt(UINT64_MAX)) return UINT64_MAX;
  return static_cast<std::uint64_t>(v);
}

}  // namespace padic_fixvec
