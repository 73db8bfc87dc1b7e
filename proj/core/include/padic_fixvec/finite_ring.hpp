#pragma once

// Exact arithmetic over Z/p^m and exhaustive enumeration of GL_n(Z/p^m).
//
// Closed-form group orders accept any prime power q. Enumeration is only
// available for prime residue fields (q = p), where O/p^m is Z/p^m.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "padic_fixvec/bigint.hpp"

namespace padic_fixvec {

/// Default cap on the number of candidate matrices an enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// Name of the environment variable that overrides the default budget.
inline constexpr const char* kBudgetEnvVar = "PADIC_FIXVEC_BUDGET";

/// kDefaultEnumerationBudget, or the value of PADIC_FIXVEC_BUDGET when it parses.
std::uint64_t default_budget();

/// Parses "100000000", "1e8" or "10^8". Throws InvalidParameter on anything else.
std::uint64_t parse_budget(const std::string& text);

/// Block sizes (n_1, ..., n_k) of a standard parabolic, top-left first.
using Partition = std::vector<std::size_t>;

bool is_prime(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  std::uint32_t f;
};

std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// Throws InvalidParameter unless q = p^f with p prime and f >= 1.
PrimePower require_prime_power(std::uint64_t q);

/// Residue data (p, f, q = p^f) of the base field.
class LocalFieldParams {
 public:
  LocalFieldParams(std::uint64_t p, std::uint32_t f);

  std::uint64_t p() const noexcept { return p_; }
  std::uint32_t f() const noexcept { return f_; }
  std::uint64_t q() const noexcept { return q_; }

  friend bool operator==(const LocalFieldParams&, const LocalFieldParams&) = default;

 private:
  std::uint64_t p_;
  std::uint32_t f_;
  std::uint64_t q_;
};

/// |GL_n(O/p^m)| = q^{n^2(m-1)} * prod_{i<n} (q^n - q^i). Requires n, m >= 1.
BigInt gl_order(std::size_t n, std::uint64_t q, std::uint32_t m);

/// Order of the block upper-triangular subgroup P(O/p^m) of GL_n(O/p^m).
BigInt parabolic_order(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m);

/// Number of all n x n matrices over Z/p^m, i.e. p^{m n^2}, saturating.
std::uint64_t candidate_count(std::size_t n, std::uint64_t p, std::uint32_t m);

/// n x n matrix with entries reduced modulo p^m.
class MatrixModPM {
 public:
  using Residue = std::uint64_t;

  /// Zero matrix. p must be prime and p^m < 2^32.
  MatrixModPM(std::size_t n, std::uint64_t p, std::uint32_t m);

  static MatrixModPM identity(std::size_t n, std::uint64_t p, std::uint32_t m);
  /// Rows of arbitrary integers, reduced into [0, p^m).
  static MatrixModPM from_rows(std::uint64_t p, std::uint32_t m,
                               const std::vector<std::vector<std::int64_t>>& rows);

  std::size_t size() const noexcept { return n_; }
  std::uint64_t prime() const noexcept { return p_; }
  std::uint32_t exponent() const noexcept { return m_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  Residue at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
  void set(std::size_t row, std::size_t col, std::int64_t value);

  /// Row-major entries.
  std::span<const Residue> entries() const noexcept { return entries_; }
  std::span<Residue> mutable_entries() noexcept { return entries_; }

  /// det mod p^m, by elimination over the chain ring Z/p^m.
  Residue determinant() const;

  friend MatrixModPM operator*(const MatrixModPM& a, const MatrixModPM& b);
  friend bool operator==(const MatrixModPM& a, const MatrixModPM& b);
  /// Lexicographic on row-major entries; only meaningful within one ring and size.
  friend std::strong_ordering operator<=>(const MatrixModPM& a, const MatrixModPM& b);

 private:
  std::size_t n_;
  std::uint64_t p_;
  std::uint32_t m_;
  std::uint64_t modulus_;
  std::vector<Residue> entries_;
};

/// det(a) is a unit mod p.
bool is_invertible(const MatrixModPM& a);

/// Every entry strictly below the block diagonal is zero. Throws on a size mismatch.
bool in_parabolic(const MatrixModPM& a, std::span<const std::size_t> partition);

/// Visits GL_n(Z/p^m) in lexicographic order of row-major entries.
/// Throws BudgetExceeded when p^{m n^2} > budget.
void for_each_gl(std::size_t n, std::uint64_t p, std::uint32_t m,
                 const std::function<void(const MatrixModPM&)>& visit,
                 std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<MatrixModPM> enumerate_gl(std::size_t n, std::uint64_t p, std::uint32_t m,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

/// Invertible block upper-triangular matrices, in the same order as for_each_gl.
/// Only the free entries are enumerated, so the budget is charged |P|-sized work.
std::vector<MatrixModPM> enumerate_parabolic(std::span<const std::size_t> partition,
                                             std::uint64_t p, std::uint32_t m,
                                             std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace padic_fixvec
