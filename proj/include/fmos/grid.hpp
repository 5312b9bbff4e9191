#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "fmos/common.hpp"

namespace fmos {

// Uniform cell-centered box grid on [-L, L]^n, n in {1, 2}.
// Points per axis N (even, >= 8), spacing h = 2L/N, centers
// x_i = -L + (i + 1/2) h.  Total point count N^n.
struct Grid {
  int n = 1;
  double L = 1.0;
  int N = 8;
  double h = 0.25;

  static Grid make(int n, double L, int N);

  // Grid whose cell centers contain +-b exactly (for box domains (-b, b)^n
  // whose boundary must sit on grid points).  Guarantees at least
  // `margin_cells` cells between |x| = b and the box edge.
  static Grid aligned(int n, double b, int N, int margin_cells = 8);

  std::size_t points() const {
    return n == 1 ? static_cast<std::size_t>(N)
                  : static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
  }

  double axis_coord(int i) const { return -L + (i + 0.5) * h; }

  std::array<double, 2> point(std::size_t flat) const {
    if (n == 1) return {axis_coord(static_cast<int>(flat)), 0.0};
    const int ix = static_cast<int>(flat / static_cast<std::size_t>(N));
    const int iy = static_cast<int>(flat % static_cast<std::size_t>(N));
    return {axis_coord(ix), axis_coord(iy)};
  }

  std::size_t flat(int ix, int iy = 0) const {
    return n == 1 ? static_cast<std::size_t>(ix)
                  : static_cast<std::size_t>(ix) * N + iy;
  }

  double cell_measure() const { return n == 1 ? h : h * h; }

  bool same_layout(const Grid& o) const {
    return n == o.n && N == o.N && L == o.L;
  }

  // Index of the grid point closest to x (1D helper), throws if off-grid.
  int axis_index(double x, double tol = 1e-9) const;
};

// Axis-aligned open box strictly inside the grid; diam is exact.
struct Domain {
  std::array<double, 2> lo{-1.0, -1.0};
  std::array<double, 2> hi{1.0, 1.0};
  int n = 1;

  static Domain box1(double a, double b);
  static Domain box2(double ax, double bx, double ay, double by);

  double diameter() const;
  bool contains(const std::array<double, 2>& x, double tol = 0.0) const;
  bool strictly_inside_grid(const Grid& g, double margin) const;
};

}  // namespace fmos
