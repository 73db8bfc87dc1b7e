#pragma once

// Unramified-twist classes of quasi-characters of F^x, counted by conductor.
//
// Two quasi-characters are equivalent when their ratio is unramified, so a
// class is determined by a character of O^x; classes of conductor <= r are
// the dual of O^x / (1 + p^r O). Only conductors and class counts are
// modelled, never character values.

#include <cstdint>
#include <span>
#include <vector>

#include "padic_fixvec/bigint.hpp"

namespace padic_fixvec {

inline constexpr std::uint64_t kDefaultDualBudget = 1'000'000;

/// |L_i|: number of classes of conductor exactly i.
BigInt num_classes_exact(std::uint64_t q, std::uint32_t i);

/// |L_{<=r}| = sum_{i<=r} |L_i|; 1 for r = 0 and (q-1) q^{r-1} otherwise.
BigInt num_classes_upto(std::uint64_t q, std::uint32_t r);

/// One member of L_conductor, identified by its position in that set.
struct QuasiCharacterClass {
  std::uint32_t conductor = 0;
  std::uint64_t class_index = 0;

  friend bool operator==(const QuasiCharacterClass&, const QuasiCharacterClass&) = default;
};

/// Throws InvalidParameter unless class_index < |L_conductor| for this q.
QuasiCharacterClass make_character_class(std::uint64_t q, std::uint32_t conductor,
                                         std::uint64_t class_index);

/// Conductor c(psi) of the fixed additive character: the largest c with psi trivial on p^{-c} O.
struct AdditiveCharacterParams {
  std::int64_t c_psi = 0;
};

/// (Z/p^r)^x as a product of cyclic groups, with a full discrete-log table.
///
/// Generators: a primitive root for odd p; -1 and 5 for p = 2 (only -1 when r = 2).
class UnitGroup {
 public:
  UnitGroup(std::uint64_t p, std::uint32_t r, std::uint64_t budget = kDefaultDualBudget);

  std::uint64_t prime() const noexcept { return p_; }
  std::uint32_t level() const noexcept { return r_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t order() const noexcept { return order_; }
  std::span<const std::uint64_t> generators() const noexcept { return generators_; }
  std::span<const std::uint64_t> generator_orders() const noexcept { return orders_; }

  /// Exponents of x against generators(); x must be a unit mod p^r.
  std::span<const std::uint64_t> log(std::uint64_t x) const;

  /// Generators of the image of 1 + p^j Z, for 0 <= j <= r (j = 0 means all units).
  std::vector<std::uint64_t> congruence_subgroup_generators(std::uint32_t j) const;

 private:
  std::uint64_t p_;
  std::uint32_t r_;
  std::uint64_t modulus_;
  std::uint64_t order_ = 1;
  std::vector<std::uint64_t> generators_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint64_t> log_table_;  // modulus_ * generators_.size(), row per residue
};

/// A character of (Z/p^r)^x, given by exponents a_t: g_t -> exp(2 pi i a_t / ord(g_t)).
struct DualCharacter {
  std::uint64_t id = 0;  // mixed-radix index of `exponents`
  std::vector<std::uint64_t> exponents;
  std::uint32_t conductor = 0;
};

/// Every character of (Z/p^r)^x with its conductor: the least j such that it is
/// trivial on 1 + p^j Z. Requires p prime and p^r <= budget.
std::vector<DualCharacter> enumerate_unit_dual(std::uint64_t p, std::uint32_t r,
                                               std::uint64_t budget = kDefaultDualBudget);

/// histogram[i] = number of characters with conductor i, for i <= r.
std::vector<std::uint64_t> conductor_histogram(std::span<const DualCharacter> dual, std::uint32_t r);

}  // namespace padic_fixvec
