#include "fmos/grid.hpp"

#include <cmath>

namespace fmos {

Grid Grid::make(int n, double L, int N) {
  require(n == 1 || n == 2, "grid: dimension must be 1 or 2");
  require(L > 0.0 && std::isfinite(L), "grid: half-width must be positive");
  require(N >= 8, "grid: need at least 8 points per axis");
  require(N % 2 == 0, "grid: points per axis must be even");
  Grid g;
  g.n = n;
  g.L = L;
  g.N = N;
  g.h = 2.0 * L / N;
  return g;
}

Grid Grid::aligned(int n, double b, int N, int margin_cells) {
  require(b > 0.0, "grid: domain half-width must be positive");
  // cells centered so that +-b are grid points: b = (k + 1/2) h needs
  // L = N b / (2k + 1); take the largest odd denominator leaving the margin
  int q = N - 2 * margin_cells;
  if (q % 2 == 0) --q;
  require(q >= 3, "grid: too few points for the requested margin");
  const double L = static_cast<double>(N) * b / q;
  Grid g = make(n, L, N);
  // sanity: +-b on grid
  (void)g.axis_index(b);
  (void)g.axis_index(-b);
  return g;
}

int Grid::axis_index(double x, double tol) const {
  const double fi = (x + L) / h - 0.5;
  const int i = static_cast<int>(std::lround(fi));
  if (i < 0 || i >= N || std::abs(fi - i) > tol * (1.0 + std::abs(fi)))
    throw input_error("grid: coordinate " + std::to_string(x) +
                      " is not a grid point");
  return i;
}

Domain Domain::box1(double a, double b) {
  require(b > a, "domain: empty box");
  Domain d;
  d.n = 1;
  d.lo = {a, 0.0};
  d.hi = {b, 0.0};
  return d;
}

Domain Domain::box2(double ax, double bx, double ay, double by) {
  require(bx > ax && by > ay, "domain: empty box");
  Domain d;
  d.n = 2;
  d.lo = {ax, ay};
  d.hi = {bx, by};
  return d;
}

double Domain::diameter() const {
  if (n == 1) return hi[0] - lo[0];
  const double dx = hi[0] - lo[0], dy = hi[1] - lo[1];
  return std::sqrt(dx * dx + dy * dy);
}

bool Domain::contains(const std::array<double, 2>& x, double tol) const {
  for (int k = 0; k < n; ++k)
    if (x[k] < lo[k] - tol || x[k] > hi[k] + tol) return false;
  return true;
}

bool Domain::strictly_inside_grid(const Grid& g, double margin) const {
  require(n == g.n, "domain: dimension mismatch with grid");
  for (int k = 0; k < n; ++k)
    if (lo[k] < -g.L + margin || hi[k] > g.L - margin) return false;
  return true;
}

}  // namespace fmos
