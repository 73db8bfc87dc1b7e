#include "padic_fixvec/global_bounds.hpp"

#include <algorithm>
#include <numeric>

#include "padic_fixvec/errors.hpp"

namespace padic_fixvec {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1U) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1U;
  }
  return result;
}

// Brent's variant; n must be odd and composite.
std::uint64_t pollard_rho(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, d = 1, power = 1, lam = 1;
    while (d == 1) {
      if (power == lam) {
        x = y;
        power *= 2;
        lam = 0;
      }
      y = f(y);
      ++lam;
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_rho(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace

std::uint64_t GlobalLevel::radical() const {
  std::uint64_t rad = 1;
  for (const auto& pe : factorization) rad *= pe.p;
  return rad;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

GlobalLevel factorize(std::uint64_t N) {
  if (N == 0 || N > kMaxGlobalLevel) {
    throw InvalidParameter("factorize: N must satisfy 1 <= N <= 10^18, got " + std::to_string(N));
  }
  GlobalLevel level{N, {}};
  std::vector<std::uint64_t> primes;
  std::uint64_t rest = N;
  for (std::uint64_t d = 2; d < 1000 && d <= rest / d; ++d) {
    while (rest % d == 0) {
      primes.push_back(d);
      rest /= d;
    }
  }
  split(rest, primes);
  std::sort(primes.begin(), primes.end());
  for (std::uint64_t p : primes) {
    if (!level.factorization.empty() && level.factorization.back().p == p) {
      ++level.factorization.back().e;
    } else {
      level.factorization.push_back({p, 1});
    }
  }
  return level;
}

BoundsResult conductor_bounds(std::uint32_t n, std::uint64_t N) {
  if (n == 0) throw InvalidParameter("conductor_bounds: n must be >= 1");
  const GlobalLevel level = factorize(N);
  const std::uint64_t rad = level.radical();
  return {BigInt(std::max(rad, N / rad)), ipow(BigInt(N), n)};
}

LocalWindow local_conductor_window(std::uint32_t n, std::uint32_t e_p) {
  if (n == 0) throw InvalidParameter("local_conductor_window: n must be >= 1");
  if (e_p == 0) throw InvalidParameter("local_conductor_window: e_p must be >= 1");
  return {std::max<std::uint64_t>(e_p - 1, 1), static_cast<std::uint64_t>(e_p) * n};
}

}  // namespace padic_fixvec
