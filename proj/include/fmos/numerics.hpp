#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace fmos {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; rule is symmetric).
struct GaussLegendre16 {
  static constexpr std::array<double, 8> nodes = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static constexpr std::array<double, 8> weights = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};

  // Integrates f over [a, b].
  template <class F>
  static double integrate(double a, double b, F&& f) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int k = 0; k < 8; ++k) {
      const double d = half * nodes[k];
      acc += weights[k] * (f(mid + d) + f(mid - d));
    }
    return acc * half;
  }
};

// Fritsch-Carlson monotone cubic interpolant on a strictly increasing grid.
// Preserves monotonicity of the data; evaluation outside the grid is linear
// continuation of the end segments.
class MonotoneCubic {
 public:
  MonotoneCubic() = default;
  MonotoneCubic(std::vector<double> xs, std::vector<double> ys);

  double operator()(double x) const;
  double derivative(double x) const;

  bool empty() const { return x_.empty(); }
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;

  std::vector<double> x_, y_, d_;  // d_: node derivatives
};

// Bisection for a monotone nondecreasing function: returns t with f(t) ~= y.
// Expands the initial bracket geometrically if needed; throws numeric_error
// on bracketing failure.
double solve_monotone(double y, double lo, double hi, double tol_abs,
                      int max_iter, const std::function<double(double)>& f);

}  // namespace fmos
