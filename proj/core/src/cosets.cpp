#include "padic_fixvec/cosets.hpp"

#include <algorithm>
#include <vector>

#include "padic_fixvec/errors.hpp"

namespace padic_fixvec {

namespace {

std::size_t checked_total(std::span<const std::size_t> partition) {
  if (partition.empty()) throw InvalidParameter("partition must be nonempty");
  std::size_t n = 0;
  for (std::size_t part : partition) {
    if (part == 0) throw InvalidParameter("partition parts must be >= 1");
    n += part;
  }
  return n;
}

std::uint64_t encode(std::span<const MatrixModPM::Residue> entries, std::uint64_t mod) {
  std::uint64_t code = 0;
  for (auto e : entries) code = code * mod + e;
  return code;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

std::uint64_t count_by_projective_line(std::uint64_t p, std::uint32_t m, std::uint64_t budget) {
  MatrixModPM probe(2, p, m);
  const std::uint64_t mod = probe.modulus();
  std::vector<std::uint64_t> units;
  for (std::uint64_t u = 1; u < mod; ++u) {
    if (u % p != 0) units.push_back(u);
  }
  const std::uint64_t gl = saturate_u64(gl_order(2, p, m));
  const std::uint64_t work = std::max(candidate_count(2, p, m), saturating_mul(gl, units.size()));
  if (work > budget) throw BudgetExceeded("parabolic_index_enumerated (projective line)", work, budget);

  // B g is determined by the bottom row of g up to scaling by a unit.
  std::vector<std::uint64_t> keys;
  keys.reserve(gl);
  for_each_gl(2, p, m, [&](const MatrixModPM& g) {
    std::uint64_t best = UINT64_MAX;
    for (std::uint64_t u : units) {
      const std::uint64_t c = u * g.at(1, 0) % mod;
      const std::uint64_t d = u * g.at(1, 1) % mod;
      best = std::min(best, c * mod + d);
    }
    keys.push_back(best);
  }, budget);
  std::sort(keys.begin(), keys.end());
  return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

std::uint64_t count_by_canonical_key(std::span<const std::size_t> partition, std::uint64_t p,
                                     std::uint32_t m, std::uint64_t budget) {
  const std::size_t n = checked_total(partition);
  const std::uint64_t gl = saturate_u64(gl_order(n, p, m));
  const std::uint64_t par = saturate_u64(parabolic_order(partition, p, m));
  const std::uint64_t work = std::max(candidate_count(n, p, m), saturating_mul(gl, par));
  if (work > budget) throw BudgetExceeded("parabolic_index_enumerated (canonical key)", work, budget);

  const auto parabolic = enumerate_parabolic(partition, p, m, budget);
  std::vector<std::uint64_t> keys;
  keys.reserve(gl);
  for_each_gl(n, p, m, [&](const MatrixModPM& g) {
    const MatrixModPM key = coset_key(g, parabolic);
    keys.push_back(encode(key.entries(), key.modulus()));
  }, budget);
  std::sort(keys.begin(), keys.end());
  return static_cast<std::uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

}  // namespace

BigInt parabolic_index_closed(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m) {
  const std::size_t n = checked_total(partition);
  const BigInt whole = gl_order(n, q, m);
  const BigInt sub = parabolic_order(partition, q, m);
  if (whole % sub != 0) throw InternalCheckFailure("parabolic_index_closed: |P| does not divide |GL|");
  return whole / sub;
}

BigInt index_m0(std::span<const std::size_t> partition) {
  checked_total(partition);
  return 1;
}

MatrixModPM coset_key(const MatrixModPM& g, std::span<const MatrixModPM> parabolic) {
  const std::size_t n = g.size();
  const std::uint64_t mod = g.modulus();
  const auto ge = g.entries();
  MatrixModPM best = g;
  auto be = best.mutable_entries();
  std::vector<MatrixModPM::Residue> row(n);
  std::vector<MatrixModPM::Residue> candidate;
  candidate.reserve(n * n);
  for (const MatrixModPM& u : parabolic) {
    const auto ue = u.entries();
    // Row-by-row product with early exit once the candidate compares greater.
    bool smaller = false;
    bool larger = false;
    candidate.clear();
    for (std::size_t i = 0; i < n && !larger; ++i) {
      std::fill(row.begin(), row.end(), 0);
      for (std::size_t k = 0; k < n; ++k) {
        const auto uik = ue[i * n + k];
        if (uik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) row[j] = (row[j] + uik * ge[k * n + j]) % mod;
      }
      for (std::size_t j = 0; j < n; ++j) {
        candidate.push_back(row[j]);
        if (!smaller && !larger) {
          if (row[j] < be[i * n + j]) smaller = true;
          else if (row[j] > be[i * n + j]) larger = true;
        }
      }
    }
    if (smaller) std::copy(candidate.begin(), candidate.end(), be.begin());
  }
  return best;
}

std::uint64_t parabolic_index_enumerated(std::span<const std::size_t> partition, std::uint64_t p,
                                         std::uint32_t m, std::uint64_t budget, CosetMethod method) {
  checked_total(partition);
  if (m == 0) throw InvalidParameter("parabolic_index_enumerated: level m must be >= 1");
  const bool borel_gl2 = partition.size() == 2 && partition[0] == 1 && partition[1] == 1;
  if (method == CosetMethod::projective_line && !borel_gl2) {
    throw InvalidParameter("projective-line coset keys apply only to the Borel of GL_2");
  }
  if (method == CosetMethod::projective_line || (method == CosetMethod::automatic && borel_gl2)) {
    return count_by_projective_line(p, m, budget);
  }
  return count_by_canonical_key(partition, p, m, budget);
}

}  // namespace padic_fixvec
