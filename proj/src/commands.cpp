#include "qcurve/commands.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "qcurve/kernels.hpp"
#include "qcurve/models.hpp"
#include "qcurve/moments.hpp"
#include "qcurve/problem_spec.hpp"
#include "qcurve/report.hpp"
#include "qcurve/validation.hpp"

namespace qcurve {

namespace {

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    err << "schema error at " << e.what() << "\n";
    return kExitSchema;
  } catch (const StationaryStateError&) {
    err << "stationary state: the initial state is an eigenstate of H, so arc length and the frame are undefined\n";
    return kExitStationary;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

ReportOptions report_options(const ProblemSpec& spec, const GlobalOptions& global) {
  return {global.gamma.value_or(spec.options.gamma), spec.options.dt_grid, spec.options.s_samples, global.oracle};
}

// The whole file is assembled in memory first so a failure never leaves a
// half-written CSV behind.
void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

void append_row(std::ostringstream& csv, const std::vector<double>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) csv << ',';
    csv << format_double(cells[i]);
  }
  csv << '\n';
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

int cmd_report(const std::filesystem::path& input, const GlobalOptions& global, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    const ProblemSpec spec = parse_problem_file(input);
    const EvolutionProblem problem = spec.build();
    const GeometryReport report = make_report(problem, report_options(spec, global));
    out << report_to_json(report);
    for (const auto& w : report.warnings) err << "warning: " << w << "\n";
    return kExitOk;
  });
}

int cmd_trajectory(const std::filesystem::path& input, double t_max, int steps, const std::filesystem::path& output,
                   const GlobalOptions& global, std::ostream& err) {
  (void)global;
  return guarded(err, [&] {
    if (steps < 2) throw Error("--steps must be at least 2");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error("--t-max must be positive");
    const ProblemSpec spec = parse_problem_file(input);
    const EvolutionProblem problem = spec.build();
    problem.require_moving();
    const std::size_t d = problem.dim();
    const double kappa_sq = clamp_rounding(curvature_from_moments(problem.moments()));
    const double tau_sq = clamp_rounding(torsion_from_moments(problem.moments()));

    std::ostringstream csv;
    csv << "t,s,fidelity_to_initial";
    for (std::size_t k = 0; k < d; ++k) csv << ",re_a" << k << ",im_a" << k;
    if (d == 2) csv << ",ax,ay,az";
    csv << ",kappa_sq,tau_sq\n";

    const StateVector& psi0 = problem.initial_state();
    std::vector<double> row;
    for (int k = 0; k < steps; ++k) {
      const double t = t_max * k / (steps - 1);
      const StateVector psi = evolve(problem, t);
      row.assign({t, problem.speed() * t, std::norm(psi0.inner(psi))});
      for (std::size_t j = 0; j < d; ++j) {
        row.push_back(psi[j].real());
        row.push_back(psi[j].imag());
      }
      if (d == 2) {
        const auto a = models::state_to_bloch(psi).a;
        row.insert(row.end(), {a.x(), a.y(), a.z()});
      }
      row.insert(row.end(), {kappa_sq, tau_sq});
      append_row(csv, row);
    }
    write_file(output, csv.str());
    return kExitOk;
  });
}

int cmd_sweep(const std::filesystem::path& input, const std::string& param, double from, double to, int points,
              const std::filesystem::path& output, const GlobalOptions& global, std::ostream& err) {
  (void)global;
  return guarded(err, [&] {
    if (points < 1) throw Error("--points must be at least 1");
    const ProblemSpec spec = parse_problem_file(input);
    // Unknown parameter names fail before any row is computed.
    (void)spec.with_parameter(param, from);

    std::vector<double> grid(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) grid[static_cast<std::size_t>(k)] = points == 1 ? from : from + (to - from) * k / (points - 1);

    // Rows are independent; each worker writes only its own slot.
    std::vector<std::array<double, 6>> rows(grid.size());
    std::vector<std::string> row_errors(grid.size());
    kernels::parallel_for(grid.size(), [&](std::size_t i) {
      auto& row = rows[i];
      row = {grid[i], kNaN, kNaN, kNaN, kNaN, kNaN};
      try {
        const EvolutionProblem problem = spec.with_parameter(param, grid[i]).build();
        if (problem.stationary()) {
          row_errors[i] = "stationary state";
          return;
        }
        const MomentSet& m = problem.moments();
        const double a3 = m.alpha3();
        row[1] = clamp_rounding(curvature_from_moments(m));
        row[2] = clamp_rounding(torsion_from_moments(m));
        row[3] = models::geodesic_efficiency(problem, spec.options.eta_t);
        row[4] = m.alpha4();
        row[5] = a3 * a3;
      } catch (const std::exception& e) {
        row_errors[i] = e.what();
      }
    });

    std::ostringstream csv;
    csv << "param,kappa_sq,tau_sq,eta,alpha4,alpha3_sq\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      append_row(csv, {rows[i].begin(), rows[i].end()});
      if (!row_errors[i].empty()) err << "warning: " << param << "=" << format_double(grid[i]) << ": " << row_errors[i] << "\n";
    }
    write_file(output, csv.str());
    return kExitOk;
  });
}

int cmd_validate(const std::optional<std::string>& perturb, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    ValidationOptions options;
    options.perturb = perturb;
    const auto results = run_validation(options);
    std::size_t passed = 0;
    for (const auto& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " residual=" << format_double(r.residual)
          << " tol=" << format_double(r.tolerance);
      if (perturb && r.fixture == *perturb) out << " [perturbed]";
      if (!r.detail.empty()) out << " error=\"" << r.detail << "\"";
      out << "\n";
      passed += r.passed ? 1 : 0;
    }
    out << "summary: " << passed << "/" << results.size() << " passed\n";
    return passed == results.size() ? kExitOk : kExitFailure;
  });
}

}  // namespace qcurve
