#pragma once

#include <vector>

#include "fmos/numerics.hpp"
#include "fmos/orlicz.hpp"

namespace fmos {

// Spherical-limit machinery.  The substitution t = r^{1-s} turns the scaled
// limit integrand into the s-independent expression
//
//   Gtilde(a) = int_0^1 int_{S^{n-1}} G(a |w_n| t) dS_w dt/t,
//
// which is evaluated by dyadic log-graded panels t in [2^{-k-1}, 2^{-k}],
// k = 0..60, with Gauss-Legendre nodes in log t per panel, and a trapezoid
// rule in the angular variable for n = 2 (two-point sum for n = 1).

// Angular factor  Lambda(b) = int_{S^{n-1}} G(b |w_n|) dS_w.
double sphere_factor(const OrliczFunction& F, int n, double b);

// K_{n,p} = int_{S^{n-1}} |w_n|^p dS_w  (closed form via the Gamma function).
double sphere_moment(int n, double p);

// Gtilde(a); p_minus > 1 is required for integrability near t = 0.
double gtilde_value(const OrliczFunction& F, int n, double a);

// Partial integral int_0^T of the same integrand (shell models use T < 1).
double gtilde_partial(const OrliczFunction& F, int n, double a, double T);

// Gtilde'(a), by differentiating the substituted integral under the integral
// sign: int_0^1 int_S g(a |w_n| t) |w_n| dS dt.
double gtilde_prime(const OrliczFunction& F, int n, double a);

// Raw limit expression at fixed s < 1, quadratured in its own variable:
//   (1-s) int_0^1 int_S G(a |w_n| r^{1-s}) dS dr/r.
// Agrees with gtilde_value by the change of variables (exactly, not only in
// the limit); the s-independence test asserts this.
double gtilde_raw(const OrliczFunction& F, int n, double a, double s);

// Tabulated spherical limit: log-log monotone cubic interpolation of Gtilde
// and (independently) of its derivative, with power-law continuation beyond
// the table.  Satisfies the same evaluator interface as OrliczFunction, so
// the local modular and the limit Dirichlet problem can consume it.
class TabulatedGtilde {
 public:
  TabulatedGtilde() = default;
  TabulatedGtilde(const OrliczFunction& base, int n);

  double G(double a) const;
  double g(double a) const;

  double p_minus() const { return pminus_; }
  double p_plus() const { return pplus_; }
  double delta2() const { return delta2_; }
  int dimension() const { return n_; }
  const std::string& name() const { return name_; }

  // Empirical sandwich constants c1 <= Gtilde/G <= c2 on [1e-3, 1e3].
  double sandwich_lo() const { return c1_; }
  double sandwich_hi() const { return c2_; }

 private:
  std::string name_;
  int n_ = 1;
  double pminus_ = 2, pplus_ = 2, delta2_ = 4;
  double c1_ = 0, c2_ = 0;
  MonotoneCubic logG_, logg_;  // log value vs log a
};

// Gtilde table row used by CSV export: t, G(t), Gtilde(t), ratio.
struct GtildeRow {
  double t, G, Gtilde, ratio;
};

std::vector<GtildeRow> gtilde_table(const OrliczFunction& F, int n,
                                    std::span<const double> ts);

}  // namespace fmos
