#pragma once

#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fmos/common.hpp"

namespace fmos {

// An Orlicz function from the built-in two-term power family
//
//   G(t) = c1 * t^p1 + c2 * t^p2,   1 < p1 <= p2 < inf,  c1 > 0, c2 >= 0,
//
// together with its exact density g = G' and growth metadata.  The family
// covers constant Lieberman ratio (c2 = 0) and the two-exponent blend.
class OrliczFunction {
 public:
  double G(double t) const {
    double v = c1_ * pow_(t, p1_);
    if (c2_ != 0.0) v += c2_ * pow_(t, p2_);
    return v;
  }

  // Right derivative of G; analytic, never a numerical difference.
  double g(double t) const {
    double v = c1_ * p1_ * pow_(t, p1_ - 1.0);
    if (c2_ != 0.0) v += c2_ * p2_ * pow_(t, p2_ - 1.0);
    return v;
  }

  double p_minus() const { return p1_; }
  double p_plus() const { return p2_; }
  double delta2() const { return delta2_; }
  const std::string& name() const { return name_; }

  // Raw two-term parameters; used by closed-form shell models.
  double coeff1() const { return c1_; }
  double expo1() const { return p1_; }
  double coeff2() const { return c2_; }
  double expo2() const { return p2_; }

  static OrliczFunction power(double p);        // t^p / p
  static OrliczFunction power_pure(double p);   // t^p
  static OrliczFunction power_half(double p);   // t^p / 2
  static OrliczFunction blend(double p, double q);  // t^p + t^q

  // Parses "power:p", "powerp:p", "powerp_half:p", "blend:p:q".
  static OrliczFunction parse(const std::string& spec);

 private:
  OrliczFunction(std::string name, double c1, double p1, double c2, double p2);

  static double pow_(double t, double p) {
    if (t <= 0.0) return 0.0;
    if (p == 1.0) return t;
    if (p == 2.0) return t * t;
    if (p == 3.0) return t * t * t;
    if (p == 4.0) {
      const double s = t * t;
      return s * s;
    }
    return std::pow(t, p);
  }

  std::string name_;
  double c1_, p1_, c2_, p2_;
  double delta2_;
};

// (G(t), g(t)) with input validation: t < 0 is a domain error, non-finite t
// an input error.
std::pair<double, double> evaluate(const OrliczFunction& F, double t);

// Legendre transform G*(s) = sup_{t>0} { s t - G(t) }, computed by monotone
// bisection on g(t) = s.
double legendre_transform(const OrliczFunction& F, double s);

// (min, max) of t g(t) / G(t) over the grid.
std::pair<double, double> estimate_indices(const OrliczFunction& F,
                                           std::span<const double> t_grid);

// max over the grid of G(2t) / G(t).
double delta2_constant(const OrliczFunction& F, std::span<const double> t_grid);

// Log-spaced grid with `count` points covering [lo, hi].
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace fmos
