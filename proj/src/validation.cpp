#include "qcurve/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <set>

#include "qcurve/frame.hpp"
#include "qcurve/kernels.hpp"
#include "qcurve/models.hpp"
#include "qcurve/moments.hpp"
#include "qcurve/oracles.hpp"
#include "qcurve/sampling.hpp"

namespace qcurve {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

// Hands each case its initial states, perturbed when the case's fixture is
// the one selected for the negative control.
class CaseContext {
 public:
  explicit CaseContext(bool perturb) : perturb_(perturb) {}

  StateVector state(const StateVector& psi) const {
    if (!perturb_) return psi;
    ComplexVector v = psi.vec();
    v(1) += kPerturbation;
    return StateVector::normalized(v);
  }

 private:
  bool perturb_;
};

struct Case {
  std::string name;
  std::string fixture;
  double tolerance;
  std::function<double(const CaseContext&)> measure;
};

double rel(double value, double reference, double floor = 1.0) {
  return std::abs(value - reference) / std::max(std::abs(reference), floor);
}

struct Pair {
  double kappa_sq;
  double tau_sq;
};

// Both pipeline paths for one problem; the residual helpers below compare
// each against the reference and keep the worse one.
struct PathValues {
  Pair moments;
  Pair geometric;
};

PathValues both_paths(const EvolutionProblem& p) {
  const MomentSet& m = p.moments();
  return {{curvature_from_moments(m), torsion_from_moments(m)},
          {curvature_geometric(p, 0.0), torsion_geometric(p, 0.0)}};
}

// Torsion comes out of a difference kappa^2 - alpha3^2, so its rounding error
// scales with kappa^2; that is the reference magnitude for the tau comparison.
double worst_rel(const PathValues& v, const Pair& ref) {
  const double tau_floor = std::max(1.0, std::abs(ref.kappa_sq));
  return std::max({rel(v.moments.kappa_sq, ref.kappa_sq), rel(v.geometric.kappa_sq, ref.kappa_sq),
                   rel(v.moments.tau_sq, ref.tau_sq, tau_floor), rel(v.geometric.tau_sq, ref.tau_sq, tau_floor)});
}

HermitianOperator sigma_z() { return models::single_qubit({Eigen::Vector3d(0, 0, 1), 0.0}); }

HermitianOperator xz_pair_hamiltonian() { return build_operator({{1.0, "XZ"}, {1.0, "ZX"}}, 2); }

// Closed forms along the XZ + ZX orbit from |00>, s = sqrt(2) t.
ComplexVector xz_pair_state(double t) {
  ComplexVector v(4);
  v << std::pow(std::cos(t), 2), -0.5 * kI * std::sin(2 * t), -0.5 * kI * std::sin(2 * t), std::pow(std::sin(t), 2);
  return v;
}

ComplexVector xz_pair_tangent(double s) {
  const double a = sqrt2 * s;
  ComplexVector v(4);
  v << -std::sin(a) / sqrt2, -kI * std::cos(a) / sqrt2, -kI * std::cos(a) / sqrt2, std::sin(a) / sqrt2;
  return v;
}

ComplexVector xz_pair_binormal(double s) {
  const double a = sqrt2 * s;
  ComplexVector v(4);
  v << 0.5 - 0.5 * std::cos(a), 0.5 * kI * std::sin(a), 0.5 * kI * std::sin(a), 0.5 * std::cos(a) + 0.5;
  return v;
}

// || a - e^{i phi} b || minimized over the phase.
double phase_distance(const ComplexVector& a, const ComplexVector& b) {
  const Complex overlap = b.dot(a);
  const Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - phase * b).norm();
}

std::vector<double> xi_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 99; ++k) g.push_back(k / 100.0);
  return g;
}

std::array<double, 4> random_couplings(sampling::Rng& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng), u(rng), u(rng)};
}

template <typename Build, typename Reference>
double coupling_family(const CaseContext& ctx, std::uint64_t seed, const StateVector& psi, Build build,
                       Reference reference) {
  sampling::Rng rng(seed);
  double worst = 0.0;
  const StateVector start = ctx.state(psi);
  for (int k = 0; k < 100; ++k) {
    const auto m = random_couplings(rng);
    const EvolutionProblem p(build(m[0], m[1], m[2], m[3]), start);
    if (p.stationary()) continue;
    const auto ref = reference(m[0], m[1], m[2], m[3]);
    worst = std::max(worst, worst_rel(both_paths(p), {ref.kappa_sq, ref.tau_sq}));
  }
  return worst;
}

std::size_t random_dim(int k) {
  static constexpr std::array<std::size_t, 4> dims{2, 3, 4, 8};
  return dims[static_cast<std::size_t>(k) % dims.size()];
}

std::vector<Case> registry() {
  std::vector<Case> cases;

  cases.push_back({"sigma_z_equator", "sigma_z_equator", 1e-9, [](const CaseContext& ctx) {
                     const EvolutionProblem p(sigma_z(), ctx.state(models::bloch_to_state(
                                                             models::BlochVector(Eigen::Vector3d(1, 0, 0)))));
                     const auto v = both_paths(p);
                     return std::max({std::abs(v.moments.kappa_sq), std::abs(v.geometric.kappa_sq),
                                      std::abs(v.moments.tau_sq), std::abs(v.geometric.tau_sq)});
                   }});

  cases.push_back({"sigma_z_tilted", "sigma_z_tilted", 1e-9, [](const CaseContext& ctx) {
                     const Eigen::Vector3d a(1.0 / sqrt2, 0.0, 1.0 / sqrt2);
                     const EvolutionProblem p(sigma_z(),
                                              ctx.state(models::bloch_to_state(models::BlochVector(a))));
                     return worst_rel(both_paths(p), {4.0, 0.0});
                   }});

  cases.push_back({"xi_curvature_curve", "xi_family", 1e-9, [](const CaseContext& ctx) {
                     double worst = 0.0;
                     for (double xi : xi_grid()) {
                       const EvolutionProblem p(sigma_z(), ctx.state(models::xi_family(xi)));
                       const double ref = (1 - 2 * xi * xi) * (1 - 2 * xi * xi) / (xi * xi * (1 - xi * xi));
                       worst = std::max(worst, worst_rel(both_paths(p), {ref, 0.0}));
                     }
                     return worst;
                   }});

  cases.push_back({"xi_kurtosis_skewness_curve", "xi_family", 1e-9, [](const CaseContext& ctx) {
                     double worst = 0.0;
                     for (double xi : xi_grid()) {
                       const EvolutionProblem p(sigma_z(), ctx.state(models::xi_family(xi)));
                       const double x2 = xi * xi;
                       const double a4 = (1 - 3 * x2 + 3 * x2 * x2) / (x2 * (1 - x2));
                       const double a3sq = (1 - 2 * x2) * (1 - 2 * x2) / (x2 * (1 - x2));
                       const double a3 = p.moments().alpha3();
                       worst = std::max({worst, rel(p.moments().alpha4(), a4), rel(a3 * a3, a3sq)});
                     }
                     return worst;
                   }});

  cases.push_back({"xi_efficiency_balanced", "xi_family", 1e-9, [](const CaseContext& ctx) {
                     const EvolutionProblem p(sigma_z(), ctx.state(models::xi_family(1.0 / sqrt2)));
                     return std::max(std::abs(models::geodesic_efficiency(p, pi / 4) - 1.0),
                                     std::abs(models::geodesic_efficiency(p, 1.0) - 1.0));
                   }});

  cases.push_back({"xi_efficiency_curve", "xi_family", 1e-6, [](const CaseContext& ctx) {
                     double worst = 0.0;
                     for (double xi : xi_grid()) {
                       const EvolutionProblem p(sigma_z(), ctx.state(models::xi_family(xi)));
                       const double x2 = xi * xi;
                       const double ref =
                           (2 / pi) * std::acos(std::sqrt(2 * x2 * x2 - 2 * x2 + 1)) / (xi * std::sqrt(1 - x2));
                       worst = std::max(worst, std::abs(models::geodesic_efficiency(p, pi / 4) - ref));
                     }
                     return worst;
                   }});

  cases.push_back({"xz_pair_coefficients", "xz_pair", 1e-9, [](const CaseContext& ctx) {
                     const EvolutionProblem p(xz_pair_hamiltonian(), ctx.state(models::basis_state("00")));
                     return worst_rel(both_paths(p), {1.0, 1.0});
                   }});

  cases.push_back({"xz_pair_state", "xz_pair", 1e-10, [](const CaseContext& ctx) {
                     const EvolutionProblem p(xz_pair_hamiltonian(), ctx.state(models::basis_state("00")));
                     double worst = 0.0;
                     for (int k = 0; k <= 40; ++k) {
                       const double t = 0.1 * k;
                       worst = std::max(worst, (evolve(p, t).vec() - xz_pair_state(t)).norm());
                     }
                     return worst;
                   }});

  cases.push_back({"xz_pair_frame", "xz_pair", 1e-9, [](const CaseContext& ctx) {
                     const EvolutionProblem p(xz_pair_hamiltonian(), ctx.state(models::basis_state("00")));
                     double worst = 0.0;
                     for (int k = 0; k <= 20; ++k) {
                       const double s = 0.15 * k;
                       const QuantumFrame f = build_frame(p, s);
                       if (!f.binormal) return std::numeric_limits<double>::infinity();
                       worst = std::max({worst, phase_distance(f.psi.vec(), xz_pair_state(s / sqrt2)),
                                         phase_distance(f.tangent.vec(), xz_pair_tangent(s)),
                                         phase_distance(f.binormal->vec(), xz_pair_binormal(s))});
                     }
                     return worst;
                   }});

  cases.push_back({"xz_pair_completion", "xz_pair", 1e-9, [](const CaseContext& ctx) {
                     const EvolutionProblem p(xz_pair_hamiltonian(), ctx.state(models::basis_state("00")));
                     ComplexVector v = ComplexVector::Zero(4);
                     v(1) = 1.0 / sqrt2;
                     v(2) = -1.0 / sqrt2;
                     double worst = 0.0;
                     for (double s : {0.0, 0.4, 1.3, 2.9}) {
                       const QuantumFrame f = build_frame(p, s);
                       if (f.extra.size() != 1) return std::numeric_limits<double>::infinity();
                       worst = std::max(worst, phase_distance(f.extra[0].vec(), v));
                     }
                     return worst;
                   }});

  cases.push_back({"xz_pair_cartan", "xz_pair", 1e-8, [](const CaseContext& ctx) {
                     const EvolutionProblem p(xz_pair_hamiltonian(), ctx.state(models::basis_state("00")));
                     CartanMatrix expected;
                     expected << 0, 1, 0, -1, 0, 1, 0, -1, 0;
                     double worst = 0.0;
                     for (double s : {0.0, 0.4, 1.3, 2.9}) {
                       worst = std::max(worst, (cartan_matrix(p, s) - expected).cwiseAbs().maxCoeff());
                     }
                     return worst;
                   }});

  cases.push_back({"nonlocal_separable_family", "product_00", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 101, models::basis_state("00"), models::two_qubit_nonlocal,
                                            models::nonlocal_separable);
                   }});

  cases.push_back({"local_bell_family", "bell_phi_plus", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 102, models::bell(models::Bell::PhiPlus), models::two_qubit_local,
                                            models::local_bell);
                   }});

  cases.push_back({"local_separable_family", "product_00", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 103, models::basis_state("00"), models::two_qubit_local,
                                            models::local_separable);
                   }});

  cases.push_back({"nonlocal_bell_family", "bell_phi_plus", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 104, models::bell(models::Bell::PhiPlus), models::two_qubit_nonlocal,
                                            models::nonlocal_bell);
                   }});

  cases.push_back({"ghz_heisenberg_family", "ghz", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 105, models::ghz(), models::heisenberg3, models::ghz_heisenberg);
                   }});

  cases.push_back({"w_heisenberg_family", "w", 1e-9, [](const CaseContext& ctx) {
                     return coupling_family(ctx, 106, models::w(), models::heisenberg3, models::w_heisenberg);
                   }});

  cases.push_back({"other_bell_states_torsion_free", "", 1e-10, [](const CaseContext&) {
                     sampling::Rng rng(107);
                     double worst = 0.0;
                     for (int k = 0; k < 100; ++k) {
                       const auto m = random_couplings(rng);
                       const auto h = models::two_qubit_nonlocal(m[0], m[1], m[2], m[3]);
                       for (auto b : {models::Bell::PhiMinus, models::Bell::PsiPlus, models::Bell::PsiMinus}) {
                         const EvolutionProblem p(h, models::bell(b));
                         if (p.stationary()) continue;
                         const auto v = both_paths(p);
                         worst = std::max({worst, std::abs(v.moments.tau_sq), std::abs(v.geometric.tau_sq)});
                       }
                     }
                     return worst;
                   }});

  // Mixed relative/absolute comparison: relative 1e-9 above 0.1, absolute
  // 1e-10 below.
  cases.push_back({"cross_path_random", "", 1e-9, [](const CaseContext&) {
                     sampling::Rng rng(201);
                     double worst = 0.0;
                     for (int k = 0; k < 200; ++k) {
                       const std::size_t d = random_dim(k);
                       const EvolutionProblem p(sampling::random_hermitian(d, rng), sampling::random_state(d, rng));
                       const auto v = both_paths(p);
                       worst = std::max({worst, rel(v.geometric.kappa_sq, v.moments.kappa_sq, 0.1),
                                         rel(v.geometric.tau_sq, v.moments.tau_sq, 0.1)});
                     }
                     return worst;
                   }});

  cases.push_back({"curvature_torsion_skewness_identity", "", 1e-10, [](const CaseContext&) {
                     sampling::Rng rng(202);
                     double worst = 0.0;
                     for (int k = 0; k < 200; ++k) {
                       const std::size_t d = random_dim(k);
                       const EvolutionProblem p(sampling::random_hermitian(d, rng), sampling::random_state(d, rng));
                       const auto v = both_paths(p);
                       const double a3 = p.moments().alpha3();
                       worst = std::max(worst, std::abs(v.geometric.kappa_sq - v.geometric.tau_sq - a3 * a3) /
                                                   std::max(1.0, p.moments().alpha4()));
                     }
                     return worst;
                   }});

  // Residual is the amount by which the Pearson gap dips below zero.
  cases.push_back({"pearson_gap_nonnegative", "", 1e-9, [](const CaseContext&) {
                     sampling::Rng rng(203);
                     double worst = 0.0;
                     for (int k = 0; k < 200; ++k) {
                       const std::size_t d = random_dim(k);
                       const EvolutionProblem p(sampling::random_hermitian(d, rng), sampling::random_state(d, rng));
                       worst = std::max(worst, -pearson_gap(p.moments()));
                     }
                     return worst;
                   }});

  cases.push_back({"finite_difference_oracle", "", 0.02, [](const CaseContext&) {
                     sampling::Rng rng(301);
                     double worst = 0.0;
                     for (int k = 0; k < 20; ++k) {
                       const std::size_t d = 3 + static_cast<std::size_t>(k % 2);
                       const EvolutionProblem p(sampling::random_hermitian(d, rng), sampling::random_state(d, rng));
                       const auto grid = default_dt_grid(p);
                       const MomentSet& m = p.moments();
                       worst = std::max({worst, rel(lt_curvature(p, grid).normalized, curvature_from_moments(m)),
                                         rel(lt_torsion(p, grid).normalized, torsion_from_moments(m))});
                     }
                     return worst;
                   }});

  cases.push_back({"single_qubit_oracle_torsion", "", 1e-10, [](const CaseContext&) {
                     sampling::Rng rng(302);
                     double worst = 0.0;
                     for (int k = 0; k < 20; ++k) {
                       const EvolutionProblem p(sampling::random_hermitian(2, rng), sampling::random_state(2, rng));
                       worst = std::max(worst, std::abs(lt_torsion(p, default_dt_grid(p)).coefficient));
                     }
                     return worst;
                   }});

  cases.push_back({"classical_circle", "", 1e-6, [](const CaseContext&) {
                     double worst = 0.0;
                     for (double radius : {0.5, 1.0, 3.0}) {
                       SpaceCurveSamples c;
                       // Tilted plane so no coordinate axis is special.
                       const Vec3 u = Vec3(1, 1, 0).normalized();
                       const Vec3 w = Vec3(-1, 1, 2).normalized();
                       for (int k = 0; k < 200; ++k) {
                         const double phi = 2 * pi * k / 200.0;
                         c.points.push_back(radius * (std::cos(phi) * u + std::sin(phi) * w) + Vec3(0.3, -1, 2));
                         c.parameter.push_back(phi);
                       }
                       const auto fs = classical_fs(c);
                       for (std::size_t i = 0; i < fs.kappa.size(); ++i) {
                         worst = std::max(worst, std::abs(fs.kappa[i] - 1.0 / radius));
                         worst = std::max(worst, fs.tau[i] ? std::abs(*fs.tau[i]) : 1.0);
                       }
                     }
                     return worst;
                   }});

  cases.push_back({"sphere_curvature_ratio", "", 1e-9, [](const CaseContext&) {
                     double worst = 0.0;
                     for (double radius : {0.5, 1.0, 2.0}) {
                       for (int k = 1; k < 40; ++k) {
                         const double theta = pi * k / 40.0;
                         if (std::abs(std::cos(theta)) < 0.05) continue;
                         const EvolutionProblem p(sigma_z(), models::bloch_to_state(models::BlochVector::spherical(theta, 0.0)));
                         const double kg = sphere_geodesic_curvature(theta, radius);
                         worst = std::max(worst, rel(curvature_from_moments(p.moments()) / (kg * kg),
                                                     4 * radius * radius, 1e-300));
                       }
                     }
                     return worst;
                   }});

  return cases;
}

}  // namespace

std::vector<std::string> validation_case_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.name);
  return names;
}

std::vector<std::string> validation_fixtures() {
  std::set<std::string> names;
  for (const auto& c : registry()) {
    if (!c.fixture.empty()) names.insert(c.fixture);
  }
  return {names.begin(), names.end()};
}

std::vector<CaseResult> run_validation(const ValidationOptions& options) {
  const std::vector<Case> cases = registry();
  if (options.perturb) {
    const auto fixtures = validation_fixtures();
    if (std::find(fixtures.begin(), fixtures.end(), *options.perturb) == fixtures.end()) {
      throw Error("unknown fixture '" + *options.perturb + "'");
    }
  }
  std::vector<CaseResult> results(cases.size());
  const auto run_one = [&](std::size_t i) {
    const Case& c = cases[i];
    CaseResult& r = results[i];
    r.name = c.name;
    r.fixture = c.fixture;
    r.tolerance = c.tolerance;
    try {
      const CaseContext ctx(options.perturb && *options.perturb == c.fixture);
      r.residual = c.measure(ctx);
      r.passed = std::isfinite(r.residual) && r.residual <= c.tolerance;
    } catch (const std::exception& e) {
      r.residual = std::numeric_limits<double>::quiet_NaN();
      r.passed = false;
      r.detail = e.what();
    }
  };
  if (options.parallel) {
    kernels::parallel_for(cases.size(), run_one);
  } else {
    kernels::serial_for(cases.size(), run_one);
  }
  return results;
}

}  // namespace qcurve
