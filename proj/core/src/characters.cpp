#include "padic_fixvec/characters.hpp"

#include <numeric>

#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/finite_ring.hpp"

namespace padic_fixvec {

BigInt num_classes_exact(std::uint64_t q, std::uint32_t i) {
  if (q < 2) throw InvalidParameter("num_classes_exact: q must be >= 2");
  if (i == 0) return 1;
  const BigInt bq(q);
  if (i == 1) return bq - 2;
  return (bq - 1) * (bq - 1) * ipow(bq, i - 2);
}

BigInt num_classes_upto(std::uint64_t q, std::uint32_t r) {
  BigInt total = 0;
  for (std::uint32_t i = 0; i <= r; ++i) total += num_classes_exact(q, i);
  return total;
}

QuasiCharacterClass make_character_class(std::uint64_t q, std::uint32_t conductor,
                                         std::uint64_t class_index) {
  if (BigInt(class_index) >= num_classes_exact(q, conductor)) {
    throw InvalidParameter("class index " + std::to_string(class_index) + " out of range for conductor " +
                           std::to_string(conductor) + " at q = " + std::to_string(q));
  }
  return {conductor, class_index};
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1U) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1U;
  }
  return result;
}

std::uint64_t multiplicative_order(std::uint64_t x, std::uint64_t mod) {
  std::uint64_t k = 1;
  for (std::uint64_t y = x % mod; y != 1 % mod; y = y * x % mod) ++k;
  return k;
}

}  // namespace

UnitGroup::UnitGroup(std::uint64_t p, std::uint32_t r, std::uint64_t budget) : p_(p), r_(r), modulus_(1) {
  if (!is_prime(p)) throw InvalidParameter("UnitGroup: p = " + std::to_string(p) + " is not prime");
  const BigInt size = ipow(BigInt(p), r);
  if (size > BigInt(budget)) throw BudgetExceeded("UnitGroup(p^r)", saturate_u64(size), budget);
  modulus_ = static_cast<std::uint64_t>(size);

  if (r >= 1) {
    if (p == 2) {
      if (r >= 2) {
        generators_.push_back(modulus_ - 1);
        orders_.push_back(2);
      }
      if (r >= 3) {
        generators_.push_back(5);
        orders_.push_back(modulus_ / 4);
      }
    } else {
      const std::uint64_t phi = (p - 1) * (modulus_ / p);
      std::uint64_t g = 2;
      while (g % p == 0 || multiplicative_order(g, modulus_) != phi) ++g;
      generators_.push_back(g);
      orders_.push_back(phi);
    }
  }
  for (auto o : orders_) order_ *= o;

  const std::size_t k = generators_.size();
  log_table_.assign(modulus_ * k, 0);
  std::vector<std::uint64_t> exps(k, 0);
  for (std::uint64_t index = 0; index < order_; ++index) {
    std::uint64_t x = 1 % modulus_;
    for (std::size_t t = 0; t < k; ++t) x = x * pow_mod(generators_[t], exps[t], modulus_) % modulus_;
    for (std::size_t t = 0; t < k; ++t) log_table_[x * k + t] = exps[t];
    for (std::size_t t = k; t > 0; --t) {
      if (++exps[t - 1] < orders_[t - 1]) break;
      exps[t - 1] = 0;
    }
  }
}

std::span<const std::uint64_t> UnitGroup::log(std::uint64_t x) const {
  x %= modulus_;
  if (modulus_ > 1 && x % p_ == 0) throw InvalidParameter("UnitGroup::log: argument is not a unit");
  const std::size_t k = generators_.size();
  return std::span<const std::uint64_t>(log_table_).subspan(x * k, k);
}

std::vector<std::uint64_t> UnitGroup::congruence_subgroup_generators(std::uint32_t j) const {
  if (j > r_) throw InvalidParameter("congruence subgroup level exceeds the group level");
  if (j == r_) return {};
  // For p = 2 every unit is already 1 mod 2, so 1 + 2Z is the whole group.
  if (j == 0 || (p_ == 2 && j == 1)) return generators_;
  std::uint64_t pj = 1;
  for (std::uint32_t i = 0; i < j; ++i) pj *= p_;
  return {(1 + pj) % modulus_};
}

std::vector<DualCharacter> enumerate_unit_dual(std::uint64_t p, std::uint32_t r, std::uint64_t budget) {
  const UnitGroup group(p, r, budget);
  const auto orders = group.generator_orders();
  const std::size_t k = orders.size();
  std::uint64_t lcm = 1;
  for (auto o : orders) lcm = std::lcm(lcm, o);

  // Logs of the subgroup generators, per level j.
  std::vector<std::vector<std::vector<std::uint64_t>>> subgroup_logs(r + 1);
  for (std::uint32_t j = 0; j <= r; ++j) {
    for (auto g : group.congruence_subgroup_generators(j)) {
      const auto l = group.log(g);
      subgroup_logs[j].emplace_back(l.begin(), l.end());
    }
  }

  auto trivial_on = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& x_log) {
    std::uint64_t phase = 0;
    for (std::size_t t = 0; t < k; ++t) phase = (phase + a[t] * x_log[t] % lcm * (lcm / orders[t])) % lcm;
    return phase == 0;
  };

  std::vector<DualCharacter> dual;
  dual.reserve(group.order());
  std::vector<std::uint64_t> a(k, 0);
  for (std::uint64_t id = 0; id < group.order(); ++id) {
    std::uint32_t conductor = r;
    for (std::uint32_t j = 0; j < r; ++j) {
      bool trivial = true;
      for (const auto& x_log : subgroup_logs[j]) {
        if (!trivial_on(a, x_log)) {
          trivial = false;
          break;
        }
      }
      if (trivial) {
        conductor = j;
        break;
      }
    }
    dual.push_back({id, a, conductor});
    for (std::size_t t = k; t > 0; --t) {
      if (++a[t - 1] < orders[t - 1]) break;
      a[t - 1] = 0;
    }
  }
  return dual;
}

std::vector<std::uint64_t> conductor_histogram(std::span<const DualCharacter> dual, std::uint32_t r) {
  std::vector<std::uint64_t> histogram(r + 1, 0);
  for (const auto& chi : dual) {
    if (chi.conductor > r) throw InvalidParameter("conductor_histogram: conductor exceeds r");
    ++histogram[chi.conductor];
  }
  return histogram;
}

}  // namespace padic_fixvec
