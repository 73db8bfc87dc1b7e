#pragma once

// Property sweeps comparing every closed form against an enumeration oracle
// or a second algebraic route. Used by `padic-fixvec verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "padic_fixvec/characters.hpp"
#include "padic_fixvec/finite_ring.hpp"

namespace padic_fixvec {

struct CheckOutcome {
  std::string name;
  std::uint64_t cases = 0;
  std::vector<std::string> failures;  // one line per failing instance
  std::vector<std::string> notes;     // observations that are not failures
  std::vector<std::string> skipped;   // instances beyond the budget

  bool passed() const noexcept { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;

  bool passed() const noexcept;
};

struct VerifyOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t dual_budget = kDefaultDualBudget;
  /// Failures recorded per check before further ones are only counted.
  std::size_t max_reported_failures = 20;
};

/// "cosets", "characters", "supercuspidal", "windows".
const std::vector<std::string>& suite_names();

/// One named suite; throws InvalidParameter for an unknown name.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options);

/// "all" or a single suite name.
std::vector<SuiteReport> run_verification(std::string_view which, const VerifyOptions& options);

}  // namespace padic_fixvec
