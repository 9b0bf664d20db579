#ifndef NCURVE_VERIFY_HPP
#define NCURVE_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ncurve {

struct CheckResult {
  std::string id;
  std::string scope;
  int criterion = 0;  // 1..10 for the acceptance criteria, 0 for extra checks
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerifyOptions {
  std::string scope = "all";
  bool inject_fault = false;  // corrupts the coefficients of f_0 in every constructed curve
  std::uint64_t seed = 0;
};

/// Scope names in run order; each maps to one criterion except "p4".
const std::vector<std::string>& verify_scopes();
int scope_criterion(const std::string& scope);

/// Never throws for computation failures: they become failing rows.
/// Throws HypothesisViolated for an unknown scope.
std::vector<CheckResult> verify_paper(const VerifyOptions& opts);

}  // namespace ncurve

#endif  // NCURVE_VERIFY_HPP
