#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace maxsurf::cli {

/// One invariant evaluated at one alpha.  Without a reference the bound is
/// compared with observed directly (the direction depends on the check);
/// with one, the check passes when |observed - reference| <= bound.
struct Check {
  std::string name;
  double alpha = 0;
  bool passed = false;
  double observed = 0;
  double bound = 0;
  std::optional<double> reference;
};

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<double> alpha_values;
  std::string timestamp;

  bool all_passed() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs every library invariant once for each alpha.  DomainError if some
/// alpha lies outside (0, 1).
VerificationReport run_verification(const std::vector<double>& alphas, std::string timestamp);

/// ISO 8601 UTC time from SOURCE_DATE_EPOCH when set, else the wall clock.
std::string default_timestamp();

}  // namespace maxsurf::cli
