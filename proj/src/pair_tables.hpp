#pragma once

// Private helpers shared by the fractional modular kernels and the solver
// assembly: per-offset geometry tables for uniform grids.

#include <cmath>
#include <cstddef>
#include <vector>

#include "fmos/grid.hpp"
#include "fmos/potential.hpp"

namespace fmos::detail {

enum class PhaseMode { none, table, general };

// |x_i - x_j| depends only on the index offset on a uniform grid, so
// r^{-s} and the quadrature weight h^{2n} / |x-y|^n are precomputed per
// offset.  For a constant potential the midpoint phase is tabulated too.
struct PairTables {
  int n = 1;
  int N = 0;
  double h = 0.0;
  double s = 0.5;
  // 1D index: d + (N-1).  2D index: (di+N-1)*(2N-1) + (dj+N-1).
  std::vector<double> rpow;      // |x-y|^{-s}
  std::vector<double> weight;    // h^{2n} / |x-y|^n
  std::vector<double> phc, phs;  // cos/sin of (x-y).A(mid), constant A only
  PhaseMode phase_mode = PhaseMode::none;

  void build(const Grid& g, double s_, const MagneticPotential* A) {
    n = g.n;
    N = g.N;
    h = g.h;
    s = s_;
    const bool use_phase = A && !A->is_zero();
    const bool const_phase =
        use_phase && A->kind() == MagneticPotential::Kind::constant;
    phase_mode = !use_phase ? PhaseMode::none
                            : (const_phase ? PhaseMode::table : PhaseMode::general);
    const int M = 2 * N - 1;
    if (n == 1) {
      rpow.assign(M, 0.0);
      weight.assign(M, 0.0);
      if (const_phase) {
        phc.assign(M, 1.0);
        phs.assign(M, 0.0);
      }
      const double a0 = const_phase ? A->constant_value()[0] : 0.0;
      for (int d = -(N - 1); d <= N - 1; ++d) {
        if (d == 0) continue;
        const double r = std::abs(d) * h;
        const int idx = d + N - 1;
        rpow[idx] = std::pow(r, -s);
        weight[idx] = h * h / r;
        if (const_phase) {
          const double th = d * h * a0;
          phc[idx] = std::cos(th);
          phs[idx] = std::sin(th);
        }
      }
    } else {
      rpow.assign(static_cast<std::size_t>(M) * M, 0.0);
      weight.assign(static_cast<std::size_t>(M) * M, 0.0);
      if (const_phase) {
        phc.assign(static_cast<std::size_t>(M) * M, 1.0);
        phs.assign(static_cast<std::size_t>(M) * M, 0.0);
      }
      const double a0 = const_phase ? A->constant_value()[0] : 0.0;
      const double a1 = const_phase ? A->constant_value()[1] : 0.0;
      const double h4 = h * h * h * h;
      for (int di = -(N - 1); di <= N - 1; ++di)
        for (int dj = -(N - 1); dj <= N - 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const double r2 =
              (static_cast<double>(di) * di + static_cast<double>(dj) * dj) * h * h;
          const std::size_t idx =
              static_cast<std::size_t>(di + N - 1) * M + (dj + N - 1);
          rpow[idx] = std::pow(r2, -0.5 * s);
          weight[idx] = h4 / r2;
          if (const_phase) {
            const double th = (di * a0 + dj * a1) * h;
            phc[idx] = std::cos(th);
            phs[idx] = std::sin(th);
          }
        }
    }
  }
};

}  // namespace fmos::detail
