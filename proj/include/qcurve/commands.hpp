#pragma once

// Subcommand bodies behind the qcurve executable. Each returns the process
// exit code: 0 success, 2 schema error, 3 stationary state, 1 anything else.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace qcurve {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitStationary = 3;

struct GlobalOptions {
  /// Overrides options.gamma from the problem document.
  std::optional<double> gamma;
  bool oracle = false;
};

int cmd_report(const std::filesystem::path& input, const GlobalOptions& global, std::ostream& out,
               std::ostream& err);

int cmd_trajectory(const std::filesystem::path& input, double t_max, int steps, const std::filesystem::path& output,
                   const GlobalOptions& global, std::ostream& err);

int cmd_sweep(const std::filesystem::path& input, const std::string& param, double from, double to, int points,
              const std::filesystem::path& output, const GlobalOptions& global, std::ostream& err);

int cmd_validate(const std::optional<std::string>& perturb, std::ostream& out, std::ostream& err);

}  // namespace qcurve
