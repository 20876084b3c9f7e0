#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qf {

inline constexpr std::uint64_t kDefaultSeed = 20260810ULL;
inline constexpr const char* kVersion = "0.1.0";

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Agreement tolerance between closed-form traces and direct evaluation.
  double match_tol = 1e-10;
  /// Survival-test tolerance.
  double survival_tol = 1e-6;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string details;
};

/// Runs one acceptance criterion (1..10), or all of them with criterion = 0.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            int criterion = 0);

}  // namespace qf
