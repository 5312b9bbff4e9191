#pragma once

#include <complex>
#include <string>
#include <vector>

#include "fmos/grid.hpp"
#include "fmos/potential.hpp"

namespace fmos {

// Complex scalar field sampled at the grid centers, extended by zero to R^n.
// Values vanish identically outside |x| <= support_radius (Euclidean).
struct GridField {
  Grid grid;
  std::vector<double> re, im;
  double support_radius = 0.0;

  static GridField zeros(const Grid& g);

  std::size_t size() const { return re.size(); }
  std::complex<double> value(std::size_t i) const { return {re[i], im[i]}; }

  double max_abs() const;
  bool is_zero() const;

  // Worst |u| found outside the recorded support radius (invariant check).
  double max_abs_outside_support() const;

  // Re-derives the tightest support radius from the data.
  void tighten_support();
};

// Built-in analytic test functions:
//   gaussian:s   exp(-|x/s|^2)
//   bump:R       (1 - |x/R|^2)_+^2
//   parabola     1 - x^2 on (-1, 1), n = 1 only
//   plane:c      e^{i c.x} * bump:1  (c applied to every axis)
GridField sample(const std::string& expr, const Grid& g);

// Pointwise value of a named test function (no grid involved).
std::complex<double> test_function_value(const std::string& expr,
                                         const std::array<double, 2>& x,
                                         int n);

GridField modulus_field(const GridField& u);

// u'(x) = e^{i c.x} u(x), A' = A + c.
std::pair<GridField, MagneticPotential> gauge_transform(
    const GridField& u, const MagneticPotential& A,
    const std::array<double, 2>& c);

GridField scaled(const GridField& u, double alpha);
GridField difference(const GridField& a, const GridField& b);

// Discrete convolution with the normalized bump mollifier, support B_eps.
// Requires eps >= 2h and support_radius + eps <= L.
GridField mollify(const GridField& u, double eps);

// Multiplication by the radial cutoff eta_k (1 on B_k, support B_2k,
// |grad eta_k| <= 2/k, C^1 polynomial ramp).
GridField truncate(const GridField& u, double k);

double cutoff_eta(double r_over_k);  // the radial profile q(|x|/k)

// CSV round trip (columns: per-axis index, re, im) plus grid manifest JSON.
void write_field_csv(const std::string& path, const GridField& u);
GridField read_field_csv(const std::string& path, const Grid& g,
                         double support_radius);
void write_grid_manifest(const std::string& path, const Grid& g,
                         double support_radius);

}  // namespace fmos
