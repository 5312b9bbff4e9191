#pragma once

#include <optional>
#include <vector>

#include "fmos/limits.hpp"
#include "fmos/modulars.hpp"

namespace fmos {

// Convex Dirichlet problem for the fractional functional
//   F_eps(u) = (1-s) I_{s,G}^A(u) - sum Re(f conj(u)) h^n,   u = 0 outside Omega,
// or the local limit functional with Phi = Gtilde and zero trace on the
// boundary.  Unknowns are the complex grid values strictly inside Omega,
// split into real/imaginary DOF components.
struct DirichletProblem {
  const OrliczFunction* orlicz = nullptr;       // fractional integrand
  const TabulatedGtilde* phi = nullptr;         // local integrand (Phi = Gtilde)
  MagneticPotential A;
  GridField f;          // source, supported in Omega
  Domain omega;
  double s = 0.5;       // fractional order; ignored when local
  bool local = false;
  QuadratureConfig qcfg;
};

struct SolveResult {
  GridField minimizer;
  double energy = 0.0;
  double gradient_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct SolverOptions {
  double energy_tol = 1e-12;   // relative per-iteration energy decrease
  double grad_tol = 1e-8;      // gradient_norm <= grad_tol * (1 + |E|)
  int max_iterations = 50000;
};

// DOF layout: grid points strictly inside Omega (points on the boundary and
// outside carry the zero extension).
std::vector<std::size_t> interior_dofs(const Grid& g, const Domain& omega);

// Exact discrete energy and gradient at u (u must respect the constraint).
// Gradient is ordered [dRe(dof0), dIm(dof0), dRe(dof1), ...].
std::pair<double, std::vector<double>> energy_and_gradient(
    const DirichletProblem& P, const GridField& u);

double energy_only(const DirichletProblem& P, const GridField& u);

// Nonlinear conjugate gradient (Polak-Ribiere+) with a backtracking line
// search on the exact energy, zero initial iterate.
SolveResult solve(const DirichletProblem& P, const SolverOptions& opt = {});

// Theorem-1.3-style ladder study: fractional solves over the ladder against
// the local limit problem with Phi = Gtilde.
struct StudyRow {
  double s = 0.0;
  double lux_distance = 0.0;  // ||u_s - u||_G
  double frac_energy = 0.0;   // F_{1-s}(u_s)
  int iterations = 0;
  bool ok = false;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  double local_energy = 0.0;
  double extrapolated_energy = 0.0;  // affine in (1-s), top three points
  GridField local_minimizer;
  bool distances_tail_decreasing = false;  // last three ladder points
  bool final_le_half_first = false;
  bool energies_monotone = false;          // |F_s - F_loc| nonincreasing
  double energy_rel_gap = 0.0;             // |extrapolated - local| / |local|
};

StudyResult convergence_study(const OrliczFunction& F,
                              const MagneticPotential& A, const GridField& f,
                              const Domain& omega,
                              std::span<const double> s_ladder,
                              const QuadratureConfig& cfg = {},
                              const SolverOptions& opt = {});

}  // namespace fmos
