#include "padic_fixvec/errors.hpp"

namespace padic_fixvec {

BudgetExceeded::BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
    : Error(what + ": requires a budget of at least " + std::to_string(required) +
            " (configured budget " + std::to_string(budget) + ")"),
      required_(required),
      budget_(budget) {}

}  // namespace padic_fixvec
