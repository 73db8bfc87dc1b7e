#include "padic_fixvec/representations.hpp"

#include <algorithm>
#include <numeric>

#include "padic_fixvec/errors.hpp"

namespace padic_fixvec {

DepthValue::DepthValue(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw InvalidParameter("DepthValue: denominator must be positive");
  if (numerator < 0) throw InvalidParameter("DepthValue: depth must be non-negative");
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string DepthValue::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const DepthValue& a, const DepthValue& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

GenericRepresentation::GenericRepresentation(std::vector<SquareIntegrableBlock> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidParameter("a generic representation needs at least one block");
  for (const auto& b : blocks_) {
    if (b.n_block == 0) throw InvalidParameter("block size n_block must be >= 1");
    n_ += b.n_block;
  }
}

std::vector<std::string> GenericRepresentation::warnings() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].n_block >= 2 && blocks_[i].conductor == 0) {
      out.push_back("block " + std::to_string(i) + ": a square integrable block of size " +
                    std::to_string(blocks_[i].n_block) + " with conductor 0 is implausible");
    }
  }
  return out;
}

std::uint64_t conductor(const GenericRepresentation& rep) {
  std::uint64_t total = 0;
  for (const auto& b : rep.blocks()) total += b.conductor;
  return total;
}

DepthValue depth_esi(std::uint32_t n, std::uint32_t c) {
  if (n == 0) throw InvalidParameter("depth_esi: n must be >= 1");
  if (c <= n) return {};
  return {static_cast<std::int64_t>(c) - n, n};
}

DepthValue depth(const GenericRepresentation& rep) {
  DepthValue best;
  for (const auto& b : rep.blocks()) best = std::max(best, depth_esi(b.n_block, b.conductor));
  return best;
}

bool has_fixed_vector_esi(std::uint32_t n, std::uint32_t c, std::uint32_t m) {
  if (n == 0) throw InvalidParameter("has_fixed_vector_esi: n must be >= 1");
  return static_cast<std::uint64_t>(c) <= static_cast<std::uint64_t>(m) * n;
}

bool has_fixed_vector_depth(const DepthValue& depth, std::uint32_t m) {
  if (m == 0) throw InvalidParameter("has_fixed_vector_depth: the depth criterion needs m >= 1");
  return depth <= DepthValue(m - 1, 1);
}

bool has_fixed_vector(const GenericRepresentation& rep, std::uint32_t m) {
  return std::all_of(rep.blocks().begin(), rep.blocks().end(), [m](const SquareIntegrableBlock& b) {
    return has_fixed_vector_esi(b.n_block, b.conductor, m);
  });
}

std::uint32_t min_level(const GenericRepresentation& rep) {
  std::uint32_t level = 0;
  for (const auto& b : rep.blocks()) {
    level = std::max(level, (b.conductor + b.n_block - 1) / b.n_block);
  }
  return level;
}

std::string ConductorWindow::to_string() const {
  if (kind == WindowKind::degenerate) return "{0}";
  return "(" + std::to_string(lower_exclusive) + ", " + std::to_string(upper) + "]";
}

ConductorWindow conductor_window(std::uint32_t n, std::uint32_t m, bool square_integrable) {
  if (n == 0) throw InvalidParameter("conductor_window: n must be >= 1");
  if (m == 0) return {WindowKind::degenerate, -1, 0};
  const std::int64_t upper = static_cast<std::int64_t>(m) * n;
  if (square_integrable) {
    return {WindowKind::square_integrable, static_cast<std::int64_t>(m - 1) * n, upper};
  }
  return {WindowKind::generic, static_cast<std::int64_t>(m), upper};
}

DepthValue depth_supercuspidal_gl2(std::uint32_t c) {
  if (c < 2) throw InvalidParameter("a supercuspidal of GL_2 has conductor >= 2");
  return {static_cast<std::int64_t>(c) - 2, 2};
}

}  // namespace padic_fixvec
