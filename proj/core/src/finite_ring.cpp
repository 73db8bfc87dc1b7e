#include "padic_fixvec/finite_ring.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "padic_fixvec/errors.hpp"

namespace padic_fixvec {

namespace {

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > limit / base) return limit + 1;
    result *= base;
  }
  return result;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

bool parse_u64(std::string_view text, std::uint64_t& out) {
  if (text.empty()) return false;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

std::uint64_t valuation(std::uint64_t x, std::uint64_t p, std::uint32_t m) {
  if (x == 0) return m;
  std::uint64_t v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

// Inverse of a unit modulo `mod` by the extended Euclidean algorithm.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t mod) {
  std::int64_t old_r = static_cast<std::int64_t>(a % mod), r = static_cast<std::int64_t>(mod);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quotient = old_r / r;
    old_r = std::exchange(r, old_r - quotient * r);
    old_s = std::exchange(s, old_s - quotient * s);
  }
  if (old_r != 1) throw InternalCheckFailure("inverse_mod: argument is not a unit");
  const auto m = static_cast<std::int64_t>(mod);
  return static_cast<std::uint64_t>(((old_s % m) + m) % m);
}

std::size_t partition_total(std::span<const std::size_t> partition) {
  if (partition.empty()) throw InvalidParameter("partition must be nonempty");
  std::size_t total = 0;
  for (std::size_t part : partition) {
    if (part == 0) throw InvalidParameter("partition parts must be >= 1");
    total += part;
  }
  return total;
}

// block_of[i] = index of the diagonal block containing row/column i.
std::vector<std::size_t> block_labels(std::span<const std::size_t> partition) {
  std::vector<std::size_t> labels;
  for (std::size_t b = 0; b < partition.size(); ++b) labels.insert(labels.end(), partition[b], b);
  return labels;
}

}  // namespace

std::uint64_t default_budget() {
  if (const char* env = std::getenv(kBudgetEnvVar); env != nullptr) {
    try {
      return parse_budget(env);
    } catch (const InvalidParameter&) {
      // unparsable override falls back to the default
    }
  }
  return kDefaultEnumerationBudget;
}

std::uint64_t parse_budget(const std::string& text) {
  std::uint64_t value = 0;
  if (parse_u64(text, value)) return value;
  for (std::string_view sep : {std::string_view("^"), std::string_view("e"), std::string_view("E")}) {
    const auto pos = text.find(sep);
    if (pos == std::string::npos) continue;
    std::uint64_t mantissa = 0, exp = 0;
    const std::string_view view(text);
    if (!parse_u64(view.substr(0, pos), mantissa) || !parse_u64(view.substr(pos + 1), exp)) break;
    // "10^9" is base^exp; "1e9" is mantissa * 10^exp
    const BigInt v = sep == "^" ? ipow(BigInt(mantissa), exp) : BigInt(mantissa) * ipow(BigInt(10), exp);
    if (v > BigInt(UINT64_MAX)) throw InvalidParameter("budget out of range: " + text);
    return static_cast<std::uint64_t>(v);
  }
  throw InvalidParameter("cannot parse budget '" + text + "'");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{q, 1};
  std::uint32_t f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, f};
}

PrimePower require_prime_power(std::uint64_t q) {
  auto pp = as_prime_power(q);
  if (!pp) throw InvalidParameter("q = " + std::to_string(q) + " is not a prime power");
  return *pp;
}

LocalFieldParams::LocalFieldParams(std::uint64_t p, std::uint32_t f) : p_(p), f_(f), q_(1) {
  if (!is_prime(p)) throw InvalidParameter("p = " + std::to_string(p) + " is not prime");
  if (f < 1) throw InvalidParameter("residue degree f must be >= 1");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  q_ = checked_pow_u64(p, f, kLimit);
  if (q_ > kLimit) throw InvalidParameter("q = p^f exceeds 2^62");
}

BigInt gl_order(std::size_t n, std::uint64_t q, std::uint32_t m) {
  if (n == 0) throw InvalidParameter("gl_order: n must be >= 1");
  if (m == 0) throw InvalidParameter("gl_order: level m must be >= 1");
  require_prime_power(q);
  const BigInt bq(q);
  const BigInt qn = ipow(bq, n);
  BigInt order = ipow(bq, static_cast<std::uint64_t>(n) * n * (m - 1));
  for (std::size_t i = 0; i < n; ++i) order *= qn - ipow(bq, i);
  return order;
}

BigInt parabolic_order(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m) {
  partition_total(partition);
  BigInt order = 1;
  std::uint64_t above_diagonal = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    order *= gl_order(partition[i], q, m);
    for (std::size_t j = i + 1; j < partition.size(); ++j) above_diagonal += partition[i] * partition[j];
  }
  return order * ipow(BigInt(q), static_cast<std::uint64_t>(m) * above_diagonal);
}

std::uint64_t candidate_count(std::size_t n, std::uint64_t p, std::uint32_t m) {
  return saturating_pow(p, static_cast<std::uint64_t>(m) * n * n);
}

MatrixModPM::MatrixModPM(std::size_t n, std::uint64_t p, std::uint32_t m)
    : n_(n), p_(p), m_(m), modulus_(1), entries_(n * n, 0) {
  if (n == 0) throw InvalidParameter("matrix size must be >= 1");
  if (m == 0) throw InvalidParameter("matrix exponent m must be >= 1");
  if (!is_prime(p)) throw InvalidParameter("matrix modulus base p = " + std::to_string(p) + " is not prime");
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 32;
  modulus_ = checked_pow_u64(p, m, kLimit);
  if (modulus_ >= kLimit) throw InvalidParameter("p^m must be below 2^32");
}

MatrixModPM MatrixModPM::identity(std::size_t n, std::uint64_t p, std::uint32_t m) {
  MatrixModPM a(n, p, m);
  for (std::size_t i = 0; i < n; ++i) a.entries_[i * n + i] = 1 % a.modulus_;
  return a;
}

MatrixModPM MatrixModPM::from_rows(std::uint64_t p, std::uint32_t m,
                                   const std::vector<std::vector<std::int64_t>>& rows) {
  MatrixModPM a(rows.size(), p, m);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw InvalidParameter("from_rows: matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) a.set(i, j, rows[i][j]);
  }
  return a;
}

void MatrixModPM::set(std::size_t row, std::size_t col, std::int64_t value) {
  const auto mod = static_cast<std::int64_t>(modulus_);
  entries_[row * n_ + col] = static_cast<Residue>(((value % mod) + mod) % mod);
}

MatrixModPM::Residue MatrixModPM::determinant() const {
  const std::uint64_t mod = modulus_;
  std::vector<Residue> a = entries_;
  std::uint64_t det = 1 % mod;
  bool negate = false;
  for (std::size_t k = 0; k < n_; ++k) {
    // Pivot on the entry of least valuation; in a chain ring it divides the rest of the column.
    std::size_t pivot_row = k;
    std::uint64_t pivot_val = valuation(a[k * n_ + k], p_, m_);
    for (std::size_t r = k + 1; r < n_ && pivot_val > 0; ++r) {
      const std::uint64_t v = valuation(a[r * n_ + k], p_, m_);
      if (v < pivot_val) {
        pivot_val = v;
        pivot_row = r;
      }
    }
    if (pivot_val >= m_) return 0;
    if (pivot_row != k) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(a[k * n_ + c], a[pivot_row * n_ + c]);
      negate = !negate;
    }
    const std::uint64_t pivot = a[k * n_ + k];
    std::uint64_t p_to_v = 1;
    for (std::uint64_t i = 0; i < pivot_val; ++i) p_to_v *= p_;
    const std::uint64_t unit_inverse = inverse_mod(pivot / p_to_v, mod);
    for (std::size_t r = k + 1; r < n_; ++r) {
      const std::uint64_t b = a[r * n_ + k];
      if (b == 0) continue;
      const std::uint64_t factor = (b / p_to_v) % mod * unit_inverse % mod;
      for (std::size_t c = k; c < n_; ++c) {
        const std::uint64_t sub = factor * a[k * n_ + c] % mod;
        a[r * n_ + c] = (a[r * n_ + c] + mod - sub) % mod;
      }
    }
    det = det * pivot % mod;
  }
  return negate ? (mod - det) % mod : det;
}

MatrixModPM operator*(const MatrixModPM& a, const MatrixModPM& b) {
  if (a.n_ != b.n_ || a.p_ != b.p_ || a.m_ != b.m_) {
    throw InvalidParameter("matrix product: operands live in different rings");
  }
  const std::size_t n = a.n_;
  const std::uint64_t mod = a.modulus_;
  MatrixModPM c(n, a.p_, a.m_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const std::uint64_t aik = a.entries_[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        c.entries_[i * n + j] = (c.entries_[i * n + j] + aik * b.entries_[k * n + j]) % mod;
      }
    }
  }
  return c;
}

bool operator==(const MatrixModPM& a, const MatrixModPM& b) {
  return a.n_ == b.n_ && a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
}

std::strong_ordering operator<=>(const MatrixModPM& a, const MatrixModPM& b) {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

bool is_invertible(const MatrixModPM& a) { return a.determinant() % a.prime() != 0; }

bool in_parabolic(const MatrixModPM& a, std::span<const std::size_t> partition) {
  if (partition_total(partition) != a.size()) {
    throw InvalidParameter("in_parabolic: partition does not sum to the matrix size");
  }
  const auto labels = block_labels(partition);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (labels[i] > labels[j] && a.at(i, j) != 0) return false;
    }
  }
  return true;
}

namespace {

// Odometer over the positions in `free`, most significant first; every other
// entry stays 0. Visits invertible matrices only.
void odometer(MatrixModPM& a, const std::vector<std::size_t>& free,
              const std::function<void(const MatrixModPM&)>& visit) {
  auto entries = a.mutable_entries();
  const std::uint64_t mod = a.modulus();
  while (true) {
    if (is_invertible(a)) visit(a);
    std::size_t k = free.size();
    while (k > 0) {
      auto& e = entries[free[k - 1]];
      if (++e < mod) break;
      e = 0;
      --k;
    }
    if (k == 0) return;
  }
}

}  // namespace

void for_each_gl(std::size_t n, std::uint64_t p, std::uint32_t m,
                 const std::function<void(const MatrixModPM&)>& visit, std::uint64_t budget) {
  MatrixModPM a(n, p, m);
  const std::uint64_t needed = candidate_count(n, p, m);
  if (needed > budget) {
    throw BudgetExceeded("enumerate_gl(n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                             ", m=" + std::to_string(m) + ")",
                         needed, budget);
  }
  std::vector<std::size_t> free(n * n);
  std::iota(free.begin(), free.end(), std::size_t{0});
  odometer(a, free, visit);
}

std::vector<MatrixModPM> enumerate_gl(std::size_t n, std::uint64_t p, std::uint32_t m,
                                      std::uint64_t budget) {
  std::vector<MatrixModPM> out;
  for_each_gl(n, p, m, [&](const MatrixModPM& a) { out.push_back(a); }, budget);
  return out;
}

std::vector<MatrixModPM> enumerate_parabolic(std::span<const std::size_t> partition,
                                             std::uint64_t p, std::uint32_t m,
                                             std::uint64_t budget) {
  const std::size_t n = partition_total(partition);
  MatrixModPM a(n, p, m);
  const auto labels = block_labels(partition);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (labels[i] <= labels[j]) free.push_back(i * n + j);
    }
  }
  const std::uint64_t needed = saturating_pow(a.modulus(), free.size());
  if (needed > budget) throw BudgetExceeded("enumerate_parabolic", needed, budget);
  std::vector<MatrixModPM> out;
  odometer(a, free, [&](const MatrixModPM& g) { out.push_back(g); });
  return out;
}

}  // namespace padic_fixvec
