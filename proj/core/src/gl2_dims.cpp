#include "padic_fixvec/gl2_dims.hpp"

#include <algorithm>

#include "padic_fixvec/cosets.hpp"
#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/finite_ring.hpp"

#include "overloaded.hpp"

namespace padic_fixvec {

namespace {

using detail::overloaded;

void require_level(std::uint32_t r, const char* what) {
  if (r == 0) throw InvalidParameter(std::string(what) + ": level must be >= 1");
}

void require_supercuspidal_conductor(std::uint32_t s) {
  if (s < 2) throw InvalidParameter("supercuspidal conductor must be >= 2, got " + std::to_string(s));
}

}  // namespace

int delta_leq(std::int64_t cond, std::int64_t r) { return cond <= r ? 1 : 0; }

BigInt dim_principal_series(std::uint64_t q, std::uint32_t c1, std::uint32_t c2, std::uint32_t r) {
  require_level(r, "dim_principal_series");
  require_prime_power(q);
  const BigInt bq(q);
  return ipow(bq, r - 1) * (bq + 1) * delta_leq(c1, r) * delta_leq(c2, r);
}

BigInt dim_steinberg_twist(std::uint64_t q, std::uint32_t c_chi, std::uint32_t r) {
  require_level(r, "dim_steinberg_twist");
  require_prime_power(q);
  const BigInt bq(q);
  return (ipow(bq, r) + ipow(bq, r - 1) - 1) * delta_leq(c_chi, r);
}

std::uint32_t twisted_conductor_minimal(std::uint32_t s, std::uint32_t c_chi) {
  require_supercuspidal_conductor(s);
  return 2 * c_chi <= s ? s : 2 * c_chi;
}

BigInt dim_supercuspidal_minimal(std::uint64_t q, std::uint32_t s, std::uint32_t m) {
  require_supercuspidal_conductor(s);
  require_prime_power(q);
  if (s > 2 * m) return 0;
  const std::uint32_t r = s / 2;
  const BigInt bq(q);
  BigInt dim = BigInt(2 * m - s + 1) * (bq - 1) * ipow(bq, r - 1);
  for (std::uint32_t i = r + 1; i <= m; ++i) {
    dim += BigInt(2 * (m - i) + 1) * (bq - 1) * (bq - 1) * ipow(bq, i - 2);
  }
  return dim;
}

BigInt dim_supercuspidal_lattice(std::uint64_t q, std::uint32_t s, std::uint32_t r) {
  require_supercuspidal_conductor(s);
  require_level(r, "dim_supercuspidal_lattice");
  require_prime_power(q);
  if (s > 2 * r) return 0;
  BigInt dim = 0;
  for (std::uint32_t i = 0; i <= r; ++i) {
    const BigInt multiplicity = num_classes_exact(q, i);
    if (multiplicity == 0) continue;
    const std::int64_t summand = 2 * static_cast<std::int64_t>(r) - twisted_conductor_minimal(s, i) + 1;
    if (summand <= 0) {
      throw InternalCheckFailure("dim_supercuspidal_lattice: non-positive summand at conductor " +
                                 std::to_string(i));
    }
    dim += multiplicity * summand;
  }
  return dim;
}

BigInt dim_supercuspidal(std::uint64_t q, std::uint32_t s, std::uint32_t c_chi, std::uint32_t m) {
  const std::uint32_t c = twisted_conductor_minimal(s, c_chi);
  if (c > 2 * m) return 0;
  return dim_supercuspidal_minimal(q, s, m);
}

std::uint64_t for_each_kirillov_basis_element(std::uint64_t q, std::uint32_t s, std::int64_t c_psi,
                                              std::int64_t r,
                                              const std::function<void(const KirillovBasisElement&)>& visit) {
  require_supercuspidal_conductor(s);
  require_prime_power(q);
  if (r < -c_psi) {
    throw InvalidParameter("kirillov_basis: level r = " + std::to_string(r) + " is below -c(psi) = " +
                           std::to_string(-c_psi));
  }
  std::uint64_t count = 0;
  for (std::int64_t i = 0; i <= r; ++i) {
    const auto conductor = static_cast<std::uint32_t>(i);
    const std::uint64_t classes = saturate_u64(num_classes_exact(q, conductor));
    const std::int64_t lo = static_cast<std::int64_t>(twisted_conductor_minimal(s, conductor)) + c_psi - r;
    const std::int64_t hi = c_psi + r;
    if (lo > hi) continue;
    for (std::uint64_t index = 0; index < classes; ++index) {
      for (std::int64_t m = lo; m <= hi; ++m) {
        visit(KirillovBasisElement{{conductor, index}, m});
        ++count;
      }
    }
  }
  return count;
}

std::vector<KirillovBasisElement> kirillov_basis(std::uint64_t q, std::uint32_t s, std::int64_t c_psi,
                                                 std::int64_t r, std::uint64_t max_elements) {
  std::vector<KirillovBasisElement> basis;
  for_each_kirillov_basis_element(q, s, c_psi, r, [&](const KirillovBasisElement& e) {
    if (basis.size() >= max_elements) {
      throw BudgetExceeded("kirillov_basis", max_elements + 1, max_elements);
    }
    basis.push_back(e);
  });
  return basis;
}

DimensionBranch dim_gl2_branch(const GL2Representation& rep, std::uint32_t m) {
  if (m == 0) {
    return std::visit(overloaded{
                          [](const PrincipalSeries&) {
                            return DimensionBranch{"principal-series/level-0", "d(c1 = 0) d(c2 = 0)"};
                          },
                          [](const SteinbergTwist&) {
                            return DimensionBranch{"steinberg-twist/level-0", "0"};
                          },
                          [](const Supercuspidal&) {
                            return DimensionBranch{"supercuspidal/level-0", "0"};
                          },
                      },
                      rep);
  }
  return std::visit(
      overloaded{
          [](const PrincipalSeries&) {
            return DimensionBranch{"principal-series", "q^(r-1) (q+1) d(c1 <= r) d(c2 <= r)"};
          },
          [](const SteinbergTwist&) {
            return DimensionBranch{"steinberg-twist", "(q^r + q^(r-1) - 1) d(c_chi <= r)"};
          },
          [m](const Supercuspidal& sc) {
            const std::uint32_t c = twisted_conductor_minimal(sc.s, sc.c_chi);
            if (c > 2 * m) return DimensionBranch{"supercuspidal/vanishing", "0 since c(pi) > 2m"};
            return DimensionBranch{
                sc.c_chi == 0 ? "supercuspidal/minimal" : "supercuspidal/twist-reduced",
                "(2m-s+1)(q-1)q^(r-1) + sum_{i=r+1}^{m} (2(m-i)+1)(q-1)^2 q^(i-2), r = floor(s/2)"};
          },
      },
      rep);
}

BigInt dim_gl2(const GL2Representation& rep, std::uint64_t q, std::uint32_t m) {
  require_prime_power(q);
  if (m == 0) {
    return std::visit(overloaded{
                          [](const PrincipalSeries& ps) {
                            return BigInt(delta_leq(ps.c1, 0) * delta_leq(ps.c2, 0));
                          },
                          [](const SteinbergTwist&) { return BigInt(0); },
                          [](const Supercuspidal& sc) {
                            require_supercuspidal_conductor(sc.s);
                            return BigInt(0);
                          },
                      },
                      rep);
  }
  return std::visit(overloaded{
                        [&](const PrincipalSeries& ps) { return dim_principal_series(q, ps.c1, ps.c2, m); },
                        [&](const SteinbergTwist& st) { return dim_steinberg_twist(q, st.c_chi, m); },
                        [&](const Supercuspidal& sc) { return dim_supercuspidal(q, sc.s, sc.c_chi, m); },
                    },
                    rep);
}

std::uint32_t conductor_gl2(const GL2Representation& rep) {
  return std::visit(overloaded{
                        [](const PrincipalSeries& ps) { return ps.c1 + ps.c2; },
                        [](const SteinbergTwist& st) { return std::max<std::uint32_t>(1, 2 * st.c_chi); },
                        [](const Supercuspidal& sc) { return twisted_conductor_minimal(sc.s, sc.c_chi); },
                    },
                    rep);
}

BigInt dim_induced_general(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m,
                           std::span<const BigInt> block_dims) {
  if (partition.size() != block_dims.size()) {
    throw InvalidParameter("dim_induced_general: " + std::to_string(block_dims.size()) +
                           " block dimensions for " + std::to_string(partition.size()) + " blocks");
  }
  require_prime_power(q);
  BigInt dim = m == 0 ? index_m0(partition) : parabolic_index_closed(partition, q, m);
  for (const auto& d : block_dims) {
    if (d < 0) throw InvalidParameter("dim_induced_general: block dimensions must be non-negative");
    dim *= d;
  }
  return dim;
}

}  // namespace padic_fixvec
