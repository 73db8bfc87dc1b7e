#pragma once

// Dimensions of K(m)-fixed vectors for irreducible admissible representations
// of GL_2(F), and the Kirillov-model basis of a minimal supercuspidal.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "padic_fixvec/bigint.hpp"
#include "padic_fixvec/characters.hpp"

namespace padic_fixvec {

/// pi(chi_1, chi_2), recorded by the conductors of chi_1 and chi_2.
struct PrincipalSeries {
  std::uint32_t c1 = 0;
  std::uint32_t c2 = 0;
  friend bool operator==(const PrincipalSeries&, const PrincipalSeries&) = default;
};

/// chi (x) St.
struct SteinbergTwist {
  std::uint32_t c_chi = 0;
  friend bool operator==(const SteinbergTwist&, const SteinbergTwist&) = default;
};

/// tau (x) chi with tau minimal among its twists: s = c(tau) >= 2, c_chi = c(chi).
struct Supercuspidal {
  std::uint32_t s = 2;
  std::uint32_t c_chi = 0;
  friend bool operator==(const Supercuspidal&, const Supercuspidal&) = default;
};

using GL2Representation = std::variant<PrincipalSeries, SteinbergTwist, Supercuspidal>;

/// 1 if cond <= r, else 0.
int delta_leq(std::int64_t cond, std::int64_t r);

/// q^{r-1}(q+1) d(c1 <= r) d(c2 <= r), r >= 1.
BigInt dim_principal_series(std::uint64_t q, std::uint32_t c1, std::uint32_t c2, std::uint32_t r);

/// (q^r + q^{r-1} - 1) d(c_chi <= r), r >= 1.
BigInt dim_steinberg_twist(std::uint64_t q, std::uint32_t c_chi, std::uint32_t r);

/// c(tau (x) chi) for minimal tau: s if 2 c_chi <= s, else 2 c_chi.
std::uint32_t twisted_conductor_minimal(std::uint32_t s, std::uint32_t c_chi);

/// Closed form for a minimal supercuspidal of conductor s; 0 when s > 2m.
BigInt dim_supercuspidal_minimal(std::uint64_t q, std::uint32_t s, std::uint32_t m);

/// sum_{i<=r} |L_i| (2r - c(pi (x) lambda_i) + 1) for a minimal supercuspidal; 0 when s > 2r.
BigInt dim_supercuspidal_lattice(std::uint64_t q, std::uint32_t s, std::uint32_t r);

/// Twisting by chi preserves K(m)-fixed vectors once c(tau (x) chi) <= 2m.
BigInt dim_supercuspidal(std::uint64_t q, std::uint32_t s, std::uint32_t c_chi, std::uint32_t m);

/// Basis vector xi^{(m)}_lambda: lambda on the valuation -m shell, zero elsewhere.
struct KirillovBasisElement {
  QuasiCharacterClass lambda;
  std::int64_t m_support = 0;
  friend bool operator==(const KirillovBasisElement&, const KirillovBasisElement&) = default;
};

inline constexpr std::uint64_t kDefaultMaxBasisElements = 10'000'000;

/// Streams the basis of K(r)-fixed vectors in the Kirillov model of a minimal
/// supercuspidal of conductor s: every xi^{(m)}_lambda with c(lambda) <= r and
/// c(pi (x) lambda) + c_psi - r <= m <= c_psi + r. Ordered by conductor, class, then m.
/// Returns the number of elements visited. Requires r >= -c_psi.
std::uint64_t for_each_kirillov_basis_element(std::uint64_t q, std::uint32_t s, std::int64_t c_psi,
                                              std::int64_t r,
                                              const std::function<void(const KirillovBasisElement&)>& visit);

/// Materialized basis; throws BudgetExceeded past max_elements.
std::vector<KirillovBasisElement> kirillov_basis(std::uint64_t q, std::uint32_t s, std::int64_t c_psi,
                                                 std::int64_t r,
                                                 std::uint64_t max_elements = kDefaultMaxBasisElements);

/// Which closed form produced a dimension, with the formula in plain text.
struct DimensionBranch {
  std::string name;
  std::string formula;
};

DimensionBranch dim_gl2_branch(const GL2Representation& rep, std::uint32_t m);

/// dim pi^{K(m)} for any level m >= 0.
BigInt dim_gl2(const GL2Representation& rep, std::uint64_t q, std::uint32_t m);

/// Conductor of the representation: c1 + c2, max(1, 2 c_chi), or the twisted supercuspidal conductor.
std::uint32_t conductor_gl2(const GL2Representation& rep);

/// |P\GL_n/K(m)| * prod dims, with index 1 at m = 0.
BigInt dim_induced_general(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m,
                           std::span<const BigInt> block_dims);

}  // namespace padic_fixvec
