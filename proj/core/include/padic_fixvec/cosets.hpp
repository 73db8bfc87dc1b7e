#pragma once

// The coefficient |P\GL_n(F)/K(m)| of the induced-dimension formula.
//
// By the Iwasawa decomposition GL_n(F) = P K(0), and because K(0) normalizes
// K(m), the double cosets are in bijection with P(O/p^m)\GL_n(O/p^m).

#include <cstdint>
#include <span>

#include "padic_fixvec/bigint.hpp"
#include "padic_fixvec/finite_ring.hpp"

namespace padic_fixvec {

/// gl_order / parabolic_order; throws InternalCheckFailure if the division is not exact.
BigInt parabolic_index_closed(std::span<const std::size_t> partition, std::uint64_t q, std::uint32_t m);

/// The m = 0 coefficient: a single double coset.
BigInt index_m0(std::span<const std::size_t> partition);

enum class CosetMethod {
  automatic,        // projective line for the Borel of GL_2, canonical keys otherwise
  canonical_key,    // lexicographically minimal representative of P g
  projective_line,  // Borel of GL_2 only: bottom row up to a unit
};

/// Lexicographically least element of { u g : u in parabolic }.
MatrixModPM coset_key(const MatrixModPM& g, std::span<const MatrixModPM> parabolic);

/// Counts distinct left cosets P g in GL_n(Z/p^m) by exhaustive enumeration.
/// The canonical-key route charges |P| * |GL| against the budget.
std::uint64_t parabolic_index_enumerated(std::span<const std::size_t> partition, std::uint64_t p,
                                         std::uint32_t m,
                                         std::uint64_t budget = kDefaultEnumerationBudget,
                                         CosetMethod method = CosetMethod::automatic);

}  // namespace padic_fixvec
