#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmos/modulars.hpp"

namespace fmos {

// Fractional + local diamagnetic inequality check.  The fractional form
//   |D_s|u|(x,y)| <= |D_s^A u(x,y)|
// is exact algebra (||a|-|b|| <= |e^{i t} a - b|) and is asserted over all
// grid pairs with margin 1e-14.  The local form |grad|u|| <= |grad u - iAu|
// holds up to discretization and is checked away from the kink set of |u|.
struct DiamagneticReport {
  long long pairs_checked = 0;
  long long violations = 0;
  double worst_margin = 0.0;  // max(lhs - rhs) over pairs; <= tol when ok
  long long local_checked = 0;
  long long local_violations = 0;
  double local_worst = 0.0;
  double local_tolerance = 0.0;
};

DiamagneticReport diamagnetic_check(const GridField& u,
                                    const MagneticPotential& A, double s,
                                    double margin_tol = 1e-14);

// Poincare inequalities on a box domain.  The two explicit forms
//   I_G(u) <= I_G^{A=0}(d u)   and   I_G(u) <= I_G^A(d u),   d = diam(Omega),
// are asserted exactly (up to discretization); the fractional form has an
// unknown constant, so the smallest c with I_G(u) <= I_{s,G}^A((1-s) c d^s u)
// is computed by bisection and reported as a regression metric.
struct PoincareReport {
  double ig_u = 0.0;
  double ig_grad = 0.0;   // I_G^{A=0}(d u)
  double iga_du = 0.0;    // I_G^A(d u)
  bool classical_ok = false;
  bool magnetic_ok = false;
  std::optional<double> s;
  double frac_constant = 0.0;  // empirical c at the given s (0 if s not given)
};

PoincareReport poincare_check(const OrliczFunction& F, const GridField& u,
                              const Domain& omega, const MagneticPotential& A,
                              std::optional<double> s = std::nullopt,
                              const QuadratureConfig& cfg = {});

// Ratio table for the mollification / truncation / A<->0 / local-control
// modular estimates; each ratio is finite when the corresponding lemma-shape
// bound holds with some constant, and is pinned by regression ceilings.
struct RatioRow {
  double s = 0.0;
  double r1 = 0.0;  // mollification, eps = 4h
  double r2 = 0.0;  // truncation, k = support_radius / 2
  double r3 = 0.0;  // A <-> 0 equivalence (worse of the two directions)
  double r4 = 0.0;  // fractional vs local control
  bool vacuous = false;  // u == 0
};

std::vector<RatioRow> lemma_ratio_suite(const OrliczFunction& F,
                                        const GridField& u,
                                        const MagneticPotential& A,
                                        std::span<const double> s_ladder,
                                        const QuadratureConfig& cfg = {});

}  // namespace fmos
