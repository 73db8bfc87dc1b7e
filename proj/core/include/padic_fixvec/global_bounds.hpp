#pragma once

// Conductor bounds for a cuspidal automorphic representation of GL_n over Q
// from its minimal principal congruence level N.

#include <cstdint>
#include <string>
#include <vector>

#include "padic_fixvec/bigint.hpp"

namespace padic_fixvec {

inline constexpr std::uint64_t kMaxGlobalLevel = 1'000'000'000'000'000'000ULL;

struct PrimeExponent {
  std::uint64_t p;
  std::uint32_t e;
  friend bool operator==(const PrimeExponent&, const PrimeExponent&) = default;
};

struct GlobalLevel {
  std::uint64_t N = 1;
  std::vector<PrimeExponent> factorization;  // primes strictly increasing

  std::uint64_t radical() const;
};

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(std::uint64_t n);

/// Trial division, then Pollard rho on a composite cofactor. 1 <= N <= 10^18.
GlobalLevel factorize(std::uint64_t N);

struct BoundsResult {
  BigInt lower;
  BigInt upper;
};

/// max(rad N, N / rad N) <= c(Pi) <= N^n.
BoundsResult conductor_bounds(std::uint32_t n, std::uint64_t N);

/// Closed range [lower, upper] of admissible local conductor exponents.
struct LocalWindow {
  std::uint64_t lower;
  std::uint64_t upper;
  bool contains(std::uint64_t c) const noexcept { return lower <= c && c <= upper; }
};

/// [max(e_p - 1, 1), e_p n] for a prime with ord_p(N) = e_p >= 1.
LocalWindow local_conductor_window(std::uint32_t n, std::uint32_t e_p);

}  // namespace padic_fixvec
