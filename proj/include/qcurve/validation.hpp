#pragma once

// Embedded reference table: closed-form curvature/torsion results plus the
// random equivalence suites. Cases are independent and may run in parallel;
// results come back in registration order.

#include <optional>
#include <string>
#include <vector>

namespace qcurve {

struct CaseResult {
  std::string name;
  std::string fixture;  ///< empty when the case has no perturbable fixture
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;   ///< error text when the case threw
};

struct ValidationOptions {
  /// Fixture whose initial state gets amplitude 1 shifted by 1e-3 (then
  /// renormalized). Negative control for the table itself.
  std::optional<std::string> perturb;
  bool parallel = true;
};

inline constexpr double kPerturbation = 1e-3;

std::vector<std::string> validation_case_names();
std::vector<std::string> validation_fixtures();

/// Throws Error when `perturb` names no registered fixture.
std::vector<CaseResult> run_validation(const ValidationOptions& options = {});

}  // namespace qcurve
