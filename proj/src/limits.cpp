#include "fmos/limits.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace fmos {

double affine_extrapolate(std::span<const double> x, std::span<const double> y,
                          int use) {
  require(x.size() == y.size() && !x.empty(), "extrapolate: bad inputs");
  const int m = std::min<int>(use, static_cast<int>(x.size()));
  const std::size_t off = x.size() - m;
  if (m == 1) return y[off];
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < m; ++i) {
    sx += x[off + i];
    sy += y[off + i];
    sxx += x[off + i] * x[off + i];
    sxy += x[off + i] * y[off + i];
  }
  const double det = m * sxx - sx * sx;
  if (det == 0.0) return sy / m;
  const double slope = (m * sxy - sx * sy) / det;
  const double intercept = (sy - slope * sx) / m;
  return intercept;
}

namespace {

void check_ladder(std::span<const double> ladder) {
  require(!ladder.empty(), "ladder must be nonempty");
  for (std::size_t i = 0; i < ladder.size(); ++i) {
    require(ladder[i] > 0.0 && ladder[i] < 1.0, "ladder entries must lie in (0,1)");
    if (i) require(ladder[i] > ladder[i - 1], "ladder must be strictly increasing");
  }
}

}  // namespace

SweepResult bbm_sweep(const OrliczFunction& F, const TabulatedGtilde& gt,
                      const GridField& u, const MagneticPotential* A,
                      std::span<const double> s_ladder,
                      const QuadratureConfig& cfg) {
  check_ladder(s_ladder);
  require(s_ladder.front() >= 0.5 && s_ladder.back() <= 0.97,
          "bbm sweep: ladder must lie in [0.5, 0.97]");
  SweepResult out;
  out.s_ladder.assign(s_ladder.begin(), s_ladder.end());
  std::vector<double> eps;
  for (double s : s_ladder) {
    const ModularReport rep = modular_IsGA(F, u, A, s, cfg);
    const double v = (1.0 - s) * rep.value;
    if (!std::isfinite(v)) throw numeric_error("bbm sweep: non-finite modular");
    out.scaled_values.push_back(v);
    eps.push_back(1.0 - s);
  }
  const MagneticPotential Azero = MagneticPotential::zero();
  out.target = modular_IGA_local(gt, u, A ? *A : Azero).value;
  out.extrapolated = affine_extrapolate(eps, out.scaled_values, 3);
  out.rel_gap =
      std::abs(out.extrapolated - out.target) / std::max(out.target, 1e-30);
  return out;
}

SweepResult bbm_sweep(const OrliczFunction& F, const GridField& u,
                      const MagneticPotential* A,
                      std::span<const double> s_ladder,
                      const QuadratureConfig& cfg) {
  const TabulatedGtilde gt(F, u.grid.n);
  return bbm_sweep(F, gt, u, A, s_ladder, cfg);
}

PointwiseBBM pointwise_bbm(const OrliczFunction& F, const GridField& u,
                           const MagneticPotential* A, std::size_t x_flat,
                           std::span<const double> s_ladder,
                           const QuadratureConfig& cfg) {
  check_ladder(s_ladder);
  require(x_flat < u.size(), "pointwise limit: point outside the grid");
  const Grid& g = u.grid;
  const auto x = g.point(x_flat);
  const bool useA = A && !A->is_zero();

  PointwiseBBM out;
  out.s_ladder.assign(s_ladder.begin(), s_ladder.end());

  const CovariantGradient z = CovariantGradient::compute(u, useA ? A : nullptr);
  std::vector<double> eps;
  for (double s : s_ladder) {
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (j == x_flat) continue;
      const auto y = g.point(j);
      double dx0 = x[0] - y[0], dx1 = g.n == 2 ? x[1] - y[1] : 0.0;
      const double r2 = dx0 * dx0 + dx1 * dx1;
      double th = 0.0;
      if (useA) {
        const std::array<double, 2> mid{0.5 * (x[0] + y[0]),
                                        0.5 * (x[1] + y[1])};
        const auto a = A->eval(mid);
        th = dx0 * a[0] + dx1 * a[1];
      }
      const double c = std::cos(th), sn = std::sin(th);
      const double rms = std::pow(r2, -0.5 * s);
      const double Dre = (u.re[x_flat] - (c * u.re[j] - sn * u.im[j])) * rms;
      const double Dim = (u.im[x_flat] - (c * u.im[j] + sn * u.re[j])) * rms;
      const double w = g.cell_measure() / std::pow(r2, 0.5 * g.n);
      acc_re += F.G(std::abs(Dre)) * w;
      acc_im += F.G(std::abs(Dim)) * w;
    }
    if (cfg.shell == ShellPolicy::taylor) {
      const ShellModel shell(F, g.n, s, g.h);
      acc_re += shell.value(z.re_norm(x_flat));
      acc_im += shell.value(z.im_norm(x_flat));
    }
    out.re_values.push_back((1.0 - s) * acc_re);
    out.im_values.push_back((1.0 - s) * acc_im);
    eps.push_back(1.0 - s);
  }
  out.re_limit = affine_extrapolate(eps, out.re_values, 3);
  out.im_limit = affine_extrapolate(eps, out.im_values, 3);
  out.re_target = gtilde_value(F, g.n, z.re_norm(x_flat));
  out.im_target = gtilde_value(F, g.n, z.im_norm(x_flat));
  return out;
}

GammaReport gamma_check(const OrliczFunction& F, const MagneticPotential* A,
                        const GridField& u, SequenceKind seq,
                        std::span<const double> s_of_k,
                        const QuadratureConfig& cfg, double tolerance,
                        double lux_tol) {
  check_ladder(s_of_k);
  GammaReport rep;
  rep.sequence = seq;
  rep.s_of_k.assign(s_of_k.begin(), s_of_k.end());

  const TabulatedGtilde gt(F, u.grid.n);
  const MagneticPotential Azero = MagneticPotential::zero();
  rep.J_limit = modular_IGA_local(gt, u, A ? *A : Azero).value;

  const std::size_t K = s_of_k.size();
  for (std::size_t k = 0; k < K; ++k) {
    GridField uk = u;
    switch (seq) {
      case SequenceKind::constant:
        break;
      case SequenceKind::mollified: {
        const double eps =
            std::max(std::pow(2.0, -static_cast<double>(k + 1)), 2.0 * u.grid.h);
        uk = mollify(u, eps);
        break;
      }
      case SequenceKind::truncated: {
        // radii shrink toward half the support as k grows
        const double kk = u.support_radius * (0.5 + 0.5 / (1.0 + static_cast<double>(k)));
        uk = truncate(u, kk);
        break;
      }
    }
    const double dist = luxemburg_norm(F, difference(uk, u), ModularKind::IG);
    if (seq != SequenceKind::constant && dist > lux_tol)
      throw input_error(
          "gamma check: sequence does not converge to u in L^G, distance " +
          std::to_string(dist));
    rep.distances.push_back(dist);
    const double s = s_of_k[k];
    rep.J_k.push_back((1.0 - s) * modular_IsGA(F, uk, A, s, cfg).value);
  }

  if (seq == SequenceKind::constant) {
    rep.limsup_gap = std::abs(rep.J_k.back() - rep.J_limit) /
                     std::max(std::abs(rep.J_limit), 1e-30);
    rep.limsup_ok = rep.limsup_gap <= tolerance;
    rep.liminf_ok = true;
  } else {
    // liminf side: J(u) <= min over the ladder tail + tolerance
    const std::size_t tail = K >= 3 ? K - 3 : 0;
    double mn = std::numeric_limits<double>::infinity();
    for (std::size_t k = tail; k < K; ++k) mn = std::min(mn, rep.J_k[k]);
    rep.liminf_margin = mn + tolerance * std::max(std::abs(rep.J_limit), 1e-30) -
                        rep.J_limit;
    rep.liminf_ok = rep.liminf_margin >= 0.0;
    rep.limsup_ok = true;
  }
  return rep;
}

}  // namespace fmos
