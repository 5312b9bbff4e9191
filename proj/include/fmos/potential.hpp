#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "fmos/grid.hpp"

namespace fmos {

// Bounded Lipschitz magnetic potential A : R^n -> R^n.
//
// Kinds: zero, constant c, linear shear (A_1 = m * x_last, rest 0), or
// sampled on the half-step lattice of a grid (the lattice holding every
// pair midpoint (x_i + x_j)/2 and every half-step x_i +- h/2 e_k used by
// covariant differences, so midpoint evaluations are exact lookups).
class MagneticPotential {
 public:
  enum class Kind { zero, constant, shear, sampled };

  MagneticPotential() = default;

  static MagneticPotential zero();
  static MagneticPotential constant(const std::array<double, 2>& c, int n);
  static MagneticPotential shear(double m, int n);
  static MagneticPotential sampled(
      const Grid& grid,
      const std::function<std::array<double, 2>(std::array<double, 2>)>& fn);

  // Parses "zero", "const:c" / "const:cx:cy", "shear:m".
  static MagneticPotential parse(const std::string& spec, int n);

  std::array<double, 2> eval(const std::array<double, 2>& x) const;

  Kind kind() const { return kind_; }
  int dimension() const { return n_; }
  bool is_zero() const { return kind_ == Kind::zero; }
  const std::array<double, 2>& constant_value() const { return c_; }

  double sup_norm() const { return sup_norm_; }
  double lipschitz_bound() const { return lip_; }
  const std::string& name() const { return name_; }

  // Shifted potential A + c (gauge companion of u -> e^{i c.x} u).
  MagneticPotential shifted(const std::array<double, 2>& c) const;

  // Sampled verification of the recorded bounds on a grid; returns the
  // worst excess (<= 0 when the invariant holds).
  double verify_bounds(const Grid& g) const;

 private:
  Kind kind_ = Kind::zero;
  int n_ = 1;
  std::array<double, 2> c_{0.0, 0.0};  // constant value or shift accumulator
  double m_ = 0.0;                     // shear slope
  std::string name_ = "zero";
  double sup_norm_ = 0.0;
  double lip_ = 0.0;

  // sampled storage on the half lattice: points -L + (m+1) h/2, m = 0..2N-2
  Grid base_;
  std::vector<double> half_[2];
  std::array<double, 2> sample_lookup(const std::array<double, 2>& x) const;
};

}  // namespace fmos
