#pragma once

// Symbolic data for irreducible generic representations of GL_n(F), and the
// conductor / depth criteria for the existence of K(m)-fixed vectors.
//
// A generic representation is Ind_P(tau_1 x ... x tau_k) with each tau_i
// essentially square integrable on GL_{n_i}; it is carried here as the
// ordered list of (n_i, c(tau_i)). The conductor of the induced
// representation is taken to be the sum of the block conductors.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace padic_fixvec {

/// Non-negative rational in lowest terms.
class DepthValue {
 public:
  DepthValue() = default;
  DepthValue(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  /// "3/2", or "1" when the denominator is 1.
  std::string to_string() const;

  friend bool operator==(const DepthValue&, const DepthValue&) = default;
  friend std::strong_ordering operator<=>(const DepthValue& a, const DepthValue& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

struct SquareIntegrableBlock {
  std::uint32_t n_block = 1;
  std::uint32_t conductor = 0;

  friend bool operator==(const SquareIntegrableBlock&, const SquareIntegrableBlock&) = default;
};

class GenericRepresentation {
 public:
  /// Throws InvalidParameter on an empty list or a block with n_block = 0.
  explicit GenericRepresentation(std::vector<SquareIntegrableBlock> blocks);

  const std::vector<SquareIntegrableBlock>& blocks() const noexcept { return blocks_; }
  std::uint32_t n() const noexcept { return n_; }

  /// Non-fatal plausibility issues, e.g. a block of size >= 2 with conductor 0.
  std::vector<std::string> warnings() const;

  friend bool operator==(const GenericRepresentation&, const GenericRepresentation&) = default;

 private:
  std::vector<SquareIntegrableBlock> blocks_;
  std::uint32_t n_ = 0;
};

/// Sum of block conductors.
std::uint64_t conductor(const GenericRepresentation& rep);

/// max((c - n)/n, 0) for an essentially square integrable representation of GL_n.
DepthValue depth_esi(std::uint32_t n, std::uint32_t c);

/// Depth of the induced representation: the largest block depth.
DepthValue depth(const GenericRepresentation& rep);

/// c <= m n.
bool has_fixed_vector_esi(std::uint32_t n, std::uint32_t c, std::uint32_t m);

/// depth <= m - 1; m must be positive.
bool has_fixed_vector_depth(const DepthValue& depth, std::uint32_t m);

/// c(tau_i) <= m n_i for every block.
bool has_fixed_vector(const GenericRepresentation& rep, std::uint32_t m);

/// Least m with has_fixed_vector(rep, m): max_i ceil(c_i / n_i).
std::uint32_t min_level(const GenericRepresentation& rep);

enum class WindowKind {
  generic,            // (m, mn]
  square_integrable,  // ((m-1)n, mn]
  degenerate,         // m = 0: {0}
};

/// Conductors c with lower_exclusive < c <= upper (or c = 0 for the degenerate window).
struct ConductorWindow {
  WindowKind kind = WindowKind::degenerate;
  std::int64_t lower_exclusive = -1;
  std::int64_t upper = 0;

  bool contains(std::int64_t c) const noexcept { return lower_exclusive < c && c <= upper; }
  /// "(2, 4]" or "{0}".
  std::string to_string() const;
};

/// Conductor window of a representation whose minimal fixed level is m.
ConductorWindow conductor_window(std::uint32_t n, std::uint32_t m, bool square_integrable = false);

/// (c - 2)/2 for a supercuspidal of GL_2; requires c >= 2.
DepthValue depth_supercuspidal_gl2(std::uint32_t c);

}  // namespace padic_fixvec
