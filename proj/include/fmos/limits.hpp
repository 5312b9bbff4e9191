#pragma once

#include <vector>

#include "fmos/modulars.hpp"

namespace fmos {

// s-ladder sweep of the scaled fractional energy against the local target.
struct SweepResult {
  std::vector<double> s_ladder;
  std::vector<double> scaled_values;  // (1-s) I_{s,G}^A(u)
  double target = 0.0;                // I_{Gtilde}^A(u)
  double extrapolated = 0.0;          // affine fit in (1-s), top three points
  double rel_gap = 0.0;               // |extrapolated - target| / max(target, 1e-30)
};

SweepResult bbm_sweep(const OrliczFunction& F, const GridField& u,
                      const MagneticPotential* A,
                      std::span<const double> s_ladder,
                      const QuadratureConfig& cfg = {});
// Variant reusing a prebuilt Gtilde table (2D tables are costly to build).
SweepResult bbm_sweep(const OrliczFunction& F, const TabulatedGtilde& gt,
                      const GridField& u, const MagneticPotential* A,
                      std::span<const double> s_ladder,
                      const QuadratureConfig& cfg = {});

// Least-squares affine extrapolation of y against x to x = 0 using the last
// `use` entries (ladder order).
double affine_extrapolate(std::span<const double> x, std::span<const double> y,
                          int use = 3);

// Pointwise limit at a fixed grid point x:
//   (1-s) int G(|Re D_s^A u(x,y)|) dy/|x-y|^n  (and Im counterpart),
// extrapolated over the ladder; targets are Gtilde of the covariant
// derivative components at x.
struct PointwiseBBM {
  std::vector<double> s_ladder, re_values, im_values;
  double re_limit = 0.0, im_limit = 0.0;
  double re_target = 0.0, im_target = 0.0;
};

PointwiseBBM pointwise_bbm(const OrliczFunction& F, const GridField& u,
                           const MagneticPotential* A, std::size_t x_flat,
                           std::span<const double> s_ladder,
                           const QuadratureConfig& cfg = {});

// Gamma-convergence spot checks against the local functional
// J(w) = I_{Gtilde}^A(w).
enum class SequenceKind { constant, mollified, truncated };

struct GammaReport {
  SequenceKind sequence = SequenceKind::constant;
  std::vector<double> s_of_k;
  std::vector<double> J_k;         // J_{s_k}(u_k)
  std::vector<double> distances;   // Luxemburg ||u_k - u||_G
  double J_limit = 0.0;            // J(u)
  double limsup_gap = 0.0;         // |J_{s_K}(u) - J(u)| for the constant seq
  double liminf_margin = 0.0;      // min_tail J_k + tol - J(u)
  bool limsup_ok = false;
  bool liminf_ok = false;
};

GammaReport gamma_check(const OrliczFunction& F, const MagneticPotential* A,
                        const GridField& u, SequenceKind seq,
                        std::span<const double> s_of_k,
                        const QuadratureConfig& cfg = {},
                        double tolerance = 0.05, double lux_tol = 0.5);

}  // namespace fmos
