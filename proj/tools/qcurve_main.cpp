#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qcurve/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Curvature and torsion of quantum evolutions"};
  app.require_subcommand(1);
  app.fallthrough();

  double gamma = 0.0;
  bool oracle = false;
  app.add_option("--gamma", gamma, "Fubini-Study scale factor for the oracle (default: document value, 2)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--oracle", oracle, "Add the finite-difference oracle to reports");

  std::string input, output, param;
  double t_max = 0.0, from = 0.0, to = 0.0;
  int steps = 0, points = 0;
  std::string perturb;

  auto* report = app.add_subcommand("report", "Print the geometry report for a problem document");
  report->add_option("--input", input, "Problem document (JSON)")->required();

  auto* trajectory = app.add_subcommand("trajectory", "Write the evolved state on a time grid as CSV");
  trajectory->add_option("--input", input, "Problem document (JSON)")->required();
  trajectory->add_option("--t-max", t_max, "Final time")->required();
  trajectory->add_option("--steps", steps, "Number of rows, including t = 0")->required();
  trajectory->add_option("--output", output, "CSV path")->required();

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter and write coefficients as CSV");
  sweep->add_option("--input", input, "Problem document (JSON)")->required();
  sweep->add_option("--param", param, "xi, theta, phi, a model coupling or a named Pauli term")->required();
  sweep->add_option("--from", from, "First grid value")->required();
  sweep->add_option("--to", to, "Last grid value")->required();
  sweep->add_option("--points", points, "Number of grid points")->required();
  sweep->add_option("--output", output, "CSV path")->required();

  auto* validate = app.add_subcommand("validate", "Run the embedded reference table");
  validate->add_option("--perturb", perturb, "Shift amplitude 1 of this fixture by 1e-3 (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  qcurve::GlobalOptions global;
  if (app.count("--gamma") > 0) global.gamma = gamma;
  global.oracle = oracle;

  if (*report) return qcurve::cmd_report(input, global, std::cout, std::cerr);
  if (*trajectory) return qcurve::cmd_trajectory(input, t_max, steps, output, global, std::cerr);
  if (*sweep) return qcurve::cmd_sweep(input, param, from, to, points, output, global, std::cerr);
  std::optional<std::string> perturbed;
  if (validate->count("--perturb") > 0) perturbed = perturb;
  return qcurve::cmd_validate(perturbed, std::cout, std::cerr);
}
