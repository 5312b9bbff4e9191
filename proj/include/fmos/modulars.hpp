#pragma once

#include <complex>
#include <optional>
#include <string>

#include "fmos/field.hpp"
#include "fmos/orlicz.hpp"
#include "fmos/spherical.hpp"

namespace fmos {

enum class ShellPolicy { omit, taylor };

enum class ModularKind {
  IG,         // int G(|Re u|) + G(|Im u|)
  IG_tilde,   // int G(|u|)
  IGA,        // local magnetic: G(|Re(grad u - iAu)|) + G(|Im ...|)
  IGA_tilde,  // local magnetic: G(|grad u - iAu|)
  IsG,        // fractional, A = 0
  IsG_tilde,
  IsGA,       // fractional magnetic
  IsGA_tilde,
};

const char* modular_kind_name(ModularKind k);
bool modular_kind_is_fractional(ModularKind k);
bool modular_kind_is_tilde(ModularKind k);
bool modular_kind_uses_potential(ModularKind k);

struct QuadratureConfig {
  double r_max = 0.0;        // 0 -> grid half-width; must be >= L otherwise
  ShellPolicy shell = ShellPolicy::taylor;
  int reduction_block = 32;  // rows per reduction block
};

struct ModularReport {
  ModularKind kind = ModularKind::IG;
  double value = 0.0;
  double s = -1.0;  // < 0 when not a fractional modular
  ShellPolicy shell = ShellPolicy::taylor;
  double error_estimate = 0.0;
};

// Magnetic Hoelder quotient of order s between two grid points:
//   (u(x) - e^{i (x-y).A((x+y)/2)} u(y)) / |x-y|^s,
// with A evaluated at the exact midpoint.  x == y is a singularity error.
std::complex<double> holder_quotient(const GridField& u,
                                     const MagneticPotential& A, double s,
                                     std::size_t ix, std::size_t iy);

// --- local modulars -------------------------------------------------------

ModularReport modular_IG(const OrliczFunction& F, const GridField& u,
                         bool tilde = false);

// Local magnetic modular with link-phase covariant central differences:
//   z_k(x) = (e^{-i h A_k(x + h/2 e_k)} u(x + h e_k)
//             - e^{+i h A_k(x - h/2 e_k)} u(x - h e_k)) / (2h),
// which is O(h^2)-consistent with grad u - iAu and transforms exactly as
// e^{i c.x} z under the constant gauge shift (u, A) -> (e^{i c.x} u, A + c).
// Requires support_radius + 2h <= L (stencil margin).
ModularReport modular_IGA_local(const OrliczFunction& F, const GridField& u,
                                const MagneticPotential& A,
                                bool tilde = false);
ModularReport modular_IGA_local(const TabulatedGtilde& F, const GridField& u,
                                const MagneticPotential& A,
                                bool tilde = false);

// --- fractional modulars ----------------------------------------------------

// I_{s,G}^A and variants: product midpoint rule over all grid pairs
// |x-y| >= h, near-diagonal shell per policy (Taylor model via covariant
// finite-difference gradients and the radially integrated closed form), and
// an analytic far-field tail bound reported in error_estimate, never added
// to the value.  Deterministic fixed-order blocked reduction.
// Pass A = nullptr (or kind IsG*) for the A-free variant.
ModularReport modular_IsGA(const OrliczFunction& F, const GridField& u,
                           const MagneticPotential* A, double s,
                           const QuadratureConfig& cfg = {},
                           bool tilde = false);

// Naive serial reference for the pair sum (kept for testing the parallel
// kernel); same math, single accumulator, no blocking.
ModularReport modular_IsGA_reference(const OrliczFunction& F,
                                     const GridField& u,
                                     const MagneticPotential* A, double s,
                                     const QuadratureConfig& cfg = {},
                                     bool tilde = false);

// Generic dispatch by kind.
ModularReport evaluate_modular(const OrliczFunction& F, const GridField& u,
                               const MagneticPotential* A, ModularKind kind,
                               double s = -1.0,
                               const QuadratureConfig& cfg = {});

// --- Luxemburg norms --------------------------------------------------------

// inf { lambda > 0 : modular(u / lambda) <= 1 }, by bisection (the modular
// is nonincreasing in lambda); relative tolerance 1e-10.
double luxemburg_norm(const OrliczFunction& F, const GridField& u,
                      ModularKind kind, double s = -1.0,
                      const MagneticPotential* A = nullptr,
                      const QuadratureConfig& cfg = {});

// Closed-form two-power shell model
//   Psi(alpha) = 1/(1-s) int_0^{h^{1-s}} Lambda(alpha t) dt/t,
// where Lambda(b) = int_S G(b |w_n|) dS = c1 K_{n,p1} b^{p1} + c2 K_{n,p2} b^{p2}.
struct ShellModel {
  double A1 = 0, e1 = 2, A2 = 0, e2 = 2;

  ShellModel() = default;
  ShellModel(const OrliczFunction& F, int n, double s, double h);

  double value(double alpha) const {
    double v = A1 * std::pow(alpha, e1);
    if (A2 != 0.0) v += A2 * std::pow(alpha, e2);
    return alpha > 0.0 ? v : 0.0;
  }
  double derivative(double alpha) const {
    if (alpha <= 0.0) return 0.0;
    double v = A1 * e1 * std::pow(alpha, e1 - 1.0);
    if (A2 != 0.0) v += A2 * e2 * std::pow(alpha, e2 - 1.0);
    return v;
  }
};

// Covariant central-difference gradient z(x) = (grad - iA) u (x) for every
// grid point with a full stencil margin; helper shared by local modulars,
// shell models and the diamagnetic/Poincare checks.
struct CovariantGradient {
  int n = 1;
  std::vector<std::complex<double>> comp[2];  // per-axis values, grid layout

  static CovariantGradient compute(const GridField& u,
                                   const MagneticPotential* A);
  double abs_at(std::size_t i) const;   // |z|
  double re_norm(std::size_t i) const;  // |Re z|
  double im_norm(std::size_t i) const;  // |Im z|
};

}  // namespace fmos
