#include "fmos/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fmos/common.hpp"

namespace fmos {

namespace {

constexpr int kDyadicPanels = 61;   // t down to 2^-61
constexpr int kAngularPoints = 256;
const double kLn2 = std::log(2.0);

void check_integrable(const OrliczFunction& F) {
  if (F.p_minus() <= 1.0)
    throw numeric_error(
        "spherical limit: integrand not integrable near t = 0 (lower index <= 1)");
}

}  // namespace

double sphere_factor(const OrliczFunction& F, int n, double b) {
  if (n == 1) return 2.0 * F.G(b);
  // trapezoid over the periodic angle; |w_2| = |sin theta|
  double acc = 0.0;
  for (int j = 0; j < kAngularPoints; ++j) {
    const double th = 2.0 * kPi * j / kAngularPoints;
    acc += F.G(b * std::abs(std::sin(th)));
  }
  return acc * (2.0 * kPi / kAngularPoints);
}

double sphere_moment(int n, double p) {
  if (n == 1) return 2.0;
  // int_0^{2pi} |sin|^p = 2 sqrt(pi) Gamma((p+1)/2) / Gamma(p/2 + 1)
  return 2.0 * std::sqrt(kPi) *
         std::exp(std::lgamma(0.5 * (p + 1.0)) - std::lgamma(0.5 * p + 1.0));
}

namespace {

// int over dyadic log-graded panels [T 2^{-k-1}, T 2^{-k}] of f(t) dt/t,
// Gauss-Legendre in tau = ln t per panel.
template <class F>
double dyadic_log_integral(double T, F&& f) {
  double acc = 0.0;
  const double lt = std::log(T);
  for (int k = 0; k < kDyadicPanels; ++k) {
    const double hi = lt - k * kLn2;
    acc += GaussLegendre16::integrate(hi - kLn2, hi,
                                      [&](double tau) { return f(std::exp(tau)); });
  }
  return acc;
}

}  // namespace

double gtilde_value(const OrliczFunction& F, int n, double a) {
  return gtilde_partial(F, n, a, 1.0);
}

double gtilde_partial(const OrliczFunction& F, int n, double a, double T) {
  if (!std::isfinite(a)) throw input_error("spherical limit: non-finite argument");
  if (a < 0.0) throw bad_domain("spherical limit: negative argument");
  require(n == 1 || n == 2, "spherical limit: dimension must be 1 or 2");
  require(T > 0.0, "spherical limit: partial bound must be positive");
  check_integrable(F);
  if (a == 0.0) return 0.0;
  return dyadic_log_integral(T, [&](double t) { return sphere_factor(F, n, a * t); });
}

double gtilde_prime(const OrliczFunction& F, int n, double a) {
  if (a < 0.0) throw bad_domain("spherical limit: negative argument");
  require(n == 1 || n == 2, "spherical limit: dimension must be 1 or 2");
  check_integrable(F);
  if (a == 0.0) return 0.0;
  auto dfactor = [&](double t) {
    if (n == 1) return 2.0 * F.g(a * t) * t;  // |w| = 1, weight t from dt = t dtau
    double acc = 0.0;
    for (int j = 0; j < kAngularPoints; ++j) {
      const double w = std::abs(std::sin(2.0 * kPi * j / kAngularPoints));
      acc += F.g(a * w * t) * w;
    }
    return acc * (2.0 * kPi / kAngularPoints) * t;
  };
  // d/da int_0^1 Lambda_g(a t) dt  with the same log-graded panels
  double acc = 0.0;
  for (int k = 0; k < kDyadicPanels; ++k) {
    const double hi = -k * kLn2;
    acc += GaussLegendre16::integrate(hi - kLn2, hi, [&](double tau) {
      return dfactor(std::exp(tau));
    });
  }
  return acc;
}

double gtilde_raw(const OrliczFunction& F, int n, double a, double s) {
  require(s > 0.0 && s < 1.0, "spherical limit: raw form needs s in (0,1)");
  if (a < 0.0) throw bad_domain("spherical limit: negative argument");
  check_integrable(F);
  if (a == 0.0) return 0.0;
  // same graded panels in the r variable; r^{1-s} spans [2^-61, 1] when
  // r spans [2^{-61/(1-s)}, 1]
  const int panels =
      std::min(4000, static_cast<int>(std::ceil(kDyadicPanels / (1.0 - s))));
  double acc = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double hi = -k * kLn2;
    acc += GaussLegendre16::integrate(hi - kLn2, hi, [&](double lr) {
      return sphere_factor(F, n, a * std::exp((1.0 - s) * lr));
    });
  }
  return (1.0 - s) * acc;
}

TabulatedGtilde::TabulatedGtilde(const OrliczFunction& base, int n) : n_(n) {
  require(n == 1 || n == 2, "spherical limit: dimension must be 1 or 2");
  check_integrable(base);
  name_ = "gtilde(" + base.name() + ")";
  pminus_ = base.p_minus();
  pplus_ = base.p_plus();
  delta2_ = base.delta2();

  const int per_decade = (n == 1) ? 32 : 12;
  const double lo = 1e-9, hi = 1e9;
  const int count = static_cast<int>(per_decade * std::log10(hi / lo)) + 1;
  std::vector<double> la(count), lG(count), lg(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) {
    const double a = lo * std::exp(step * i);
    la[i] = std::log(a);
    lG[i] = std::log(gtilde_value(base, n, a));
    lg[i] = std::log(gtilde_prime(base, n, a));
  }
  logG_ = MonotoneCubic(la, lG);
  logg_ = MonotoneCubic(std::move(la), std::move(lg));

  c1_ = std::numeric_limits<double>::infinity();
  c2_ = 0.0;
  for (double t : log_grid(1e-3, 1e3, 61)) {
    const double r = G(t) / base.G(t);
    c1_ = std::min(c1_, r);
    c2_ = std::max(c2_, r);
  }
}

double TabulatedGtilde::G(double a) const {
  if (!std::isfinite(a)) throw input_error("gtilde: non-finite argument");
  if (a < 0.0) throw bad_domain("gtilde: negative argument");
  if (a == 0.0) return 0.0;
  return std::exp(logG_(std::log(a)));
}

double TabulatedGtilde::g(double a) const {
  if (a <= 0.0) return 0.0;
  return std::exp(logg_(std::log(a)));
}

std::vector<GtildeRow> gtilde_table(const OrliczFunction& F, int n,
                                    std::span<const double> ts) {
  std::vector<GtildeRow> rows;
  rows.reserve(ts.size());
  for (double t : ts) {
    const double G = F.G(t);
    const double Gt = gtilde_value(F, n, t);
    rows.push_back({t, G, Gt, G > 0 ? Gt / G : 0.0});
  }
  return rows;
}

}  // namespace fmos
