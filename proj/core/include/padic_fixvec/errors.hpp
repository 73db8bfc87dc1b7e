#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace padic_fixvec {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates the documented precondition of an operation.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration would visit more candidates than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget);

  /// Work units the enumeration needs; saturates at UINT64_MAX.
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

/// A consistency check inside the library failed (exact division, sign of a summand, ...).
class InternalCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace padic_fixvec
