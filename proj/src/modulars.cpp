#include "fmos/modulars.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fmos/par.hpp"
#include "pair_tables.hpp"

namespace fmos {

const char* modular_kind_name(ModularKind k) {
  switch (k) {
    case ModularKind::IG: return "IG";
    case ModularKind::IG_tilde: return "tIG";
    case ModularKind::IGA: return "IGA";
    case ModularKind::IGA_tilde: return "tIGA";
    case ModularKind::IsG: return "IsG";
    case ModularKind::IsG_tilde: return "tIsG";
    case ModularKind::IsGA: return "IsGA";
    case ModularKind::IsGA_tilde: return "tIsGA";
  }
  return "?";
}

bool modular_kind_is_fractional(ModularKind k) {
  return k == ModularKind::IsG || k == ModularKind::IsG_tilde ||
         k == ModularKind::IsGA || k == ModularKind::IsGA_tilde;
}

bool modular_kind_is_tilde(ModularKind k) {
  return k == ModularKind::IG_tilde || k == ModularKind::IGA_tilde ||
         k == ModularKind::IsG_tilde || k == ModularKind::IsGA_tilde;
}

bool modular_kind_uses_potential(ModularKind k) {
  return k == ModularKind::IGA || k == ModularKind::IGA_tilde ||
         k == ModularKind::IsGA || k == ModularKind::IsGA_tilde;
}

// ---------------------------------------------------------------------------
// pair geometry tables
// ---------------------------------------------------------------------------

namespace {

using detail::PairTables;
using detail::PhaseMode;

// Sum of the pair integrand over the ordered pairs (i, j), j != i, for the
// rows in [row_lo, row_hi).  Rows whose value vanishes iterate only over the
// nonzero columns.  Fixed iteration order.
double pair_rows(const OrliczFunction& G, const GridField& u,
                 const MagneticPotential* A, const PairTables& tab, bool tilde,
                 const std::vector<std::size_t>& nz, std::size_t row_lo,
                 std::size_t row_hi) {
  const double* re = u.re.data();
  const double* im = u.im.data();
  const int N = tab.N;
  const int M = 2 * N - 1;
  const Grid& g = u.grid;
  const PhaseMode pm = tab.phase_mode;

  double acc = 0.0;
  for (std::size_t i = row_lo; i < row_hi; ++i) {
    const double uire = re[i], uiim = im[i];
    const bool row_nonzero = (uire != 0.0) || (uiim != 0.0);
    const int ix = tab.n == 2 ? static_cast<int>(i) / N : static_cast<int>(i);
    const int iy = tab.n == 2 ? static_cast<int>(i) % N : 0;

    auto body = [&](std::size_t j) {
      if (j == i) return;
      int jx, jy = 0, di, dj = 0;
      std::size_t idx;
      if (tab.n == 1) {
        jx = static_cast<int>(j);
        di = ix - jx;
        idx = static_cast<std::size_t>(di + N - 1);
      } else {
        jx = static_cast<int>(j) / N;
        jy = static_cast<int>(j) % N;
        di = ix - jx;
        dj = iy - jy;
        idx = static_cast<std::size_t>(di + N - 1) * M + (dj + N - 1);
      }
      const double rms = tab.rpow[idx];
      const double w = tab.weight[idx];

      double c = 1.0, sn = 0.0;
      if (pm == PhaseMode::table) {
        c = tab.phc[idx];
        sn = tab.phs[idx];
      } else if (pm == PhaseMode::general) {
        std::array<double, 2> mid{
            -g.L + (ix + jx + 1.0) * g.h * 0.5,
            tab.n == 2 ? -g.L + (iy + jy + 1.0) * g.h * 0.5 : 0.0};
        const auto a = A->eval(mid);
        const double th = di * g.h * a[0] + (tab.n == 2 ? dj * g.h * a[1] : 0.0);
        c = std::cos(th);
        sn = std::sin(th);
      }
      // D = (u_i - e^{i theta} u_j) r^{-s}
      const double pjre = c * re[j] - sn * im[j];
      const double pjim = c * im[j] + sn * re[j];
      const double Dre = (uire - pjre) * rms;
      const double Dim = (uiim - pjim) * rms;
      if (tilde) {
        acc += G.G(std::hypot(Dre, Dim)) * w;
      } else {
        acc += (G.G(std::abs(Dre)) + G.G(std::abs(Dim))) * w;
      }
    };

    if (row_nonzero) {
      const std::size_t P = u.size();
      for (std::size_t j = 0; j < P; ++j) body(j);
    } else {
      for (std::size_t j : nz) body(j);
    }
  }
  return acc;
}

std::vector<std::size_t> nonzero_indices(const GridField& u) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u.re[i] != 0.0 || u.im[i] != 0.0) nz.push_back(i);
  return nz;
}

// Analytic far-field tail bound: contributions of pairs with one point at
// distance >= R from the support, bounded through the growth envelope
//   G(v r^{-s}) <= r^{-s p} G(v)  with p = p_- for r >= 1 and p_+ for r < 1.
double tail_Q(double R, double s, double pminus, double pplus) {
  const double R1 = std::max(R, 1.0);
  double q = std::pow(R1, -s * pminus) / (s * pminus);
  if (R < 1.0)
    q += (std::pow(R, -s * pplus) - 1.0) / (s * pplus);
  return q;
}

template <class GF>
double tilde_mass(const GF& G, const GridField& u) {
  double m = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    m += G.G(std::hypot(u.re[i], u.im[i]));
  return m * u.grid.cell_measure();
}

}  // namespace

// ---------------------------------------------------------------------------
// Hoelder quotient
// ---------------------------------------------------------------------------

std::complex<double> holder_quotient(const GridField& u,
                                     const MagneticPotential& A, double s,
                                     std::size_t ix, std::size_t iy) {
  if (!(s > 0.0 && s < 1.0))
    throw bad_domain("holder quotient: s must lie in (0, 1)");
  require(ix < u.size() && iy < u.size(), "holder quotient: index out of range");
  if (ix == iy) throw bad_domain("holder quotient: x = y is singular");
  const auto x = u.grid.point(ix);
  const auto y = u.grid.point(iy);
  const int n = u.grid.n;
  std::array<double, 2> mid{0.5 * (x[0] + y[0]), 0.5 * (x[1] + y[1])};
  const auto a = A.eval(mid);
  double th = (x[0] - y[0]) * a[0];
  double r2 = (x[0] - y[0]) * (x[0] - y[0]);
  if (n == 2) {
    th += (x[1] - y[1]) * a[1];
    r2 += (x[1] - y[1]) * (x[1] - y[1]);
  }
  const std::complex<double> phase{std::cos(th), std::sin(th)};
  return (u.value(ix) - phase * u.value(iy)) * std::pow(r2, -0.5 * s);
}

// ---------------------------------------------------------------------------
// local modulars
// ---------------------------------------------------------------------------

ModularReport modular_IG(const OrliczFunction& F, const GridField& u,
                         bool tilde) {
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (tilde)
      acc += F.G(std::hypot(u.re[i], u.im[i]));
    else
      acc += F.G(std::abs(u.re[i])) + F.G(std::abs(u.im[i]));
  }
  ModularReport rep;
  rep.kind = tilde ? ModularKind::IG_tilde : ModularKind::IG;
  rep.value = acc * u.grid.cell_measure();
  return rep;
}

CovariantGradient CovariantGradient::compute(const GridField& u,
                                             const MagneticPotential* A) {
  const Grid& g = u.grid;
  if (u.support_radius > g.L - 2.0 * g.h + 1e-12)
    throw input_error(
        "covariant gradient: support touches the boundary (stencil margin)");
  CovariantGradient out;
  out.n = g.n;
  for (int k = 0; k < g.n; ++k)
    out.comp[k].assign(g.points(), {0.0, 0.0});

  const bool hasA = A && !A->is_zero();
  const double inv2h = 1.0 / (2.0 * g.h);
  auto link = [&](const std::array<double, 2>& xm, int axis) {
    if (!hasA) return std::complex<double>{1.0, 0.0};
    const auto a = A->eval(xm);
    const double th = g.h * a[axis];
    return std::complex<double>{std::cos(th), -std::sin(th)};  // e^{-i h A_k}
  };

  if (g.n == 1) {
    for (int i = 1; i + 1 < g.N; ++i) {
      const double x = g.axis_coord(i);
      // e^{-i h A(x + h/2)} u(x+h) - e^{+i h A(x - h/2)} u(x-h), over 2h
      const auto fwd = link({x + 0.5 * g.h, 0.0}, 0);
      const auto bwd = std::conj(link({x - 0.5 * g.h, 0.0}, 0));
      out.comp[0][i] = (fwd * u.value(i + 1) - bwd * u.value(i - 1)) * inv2h;
    }
  } else {
    for (int ix = 1; ix + 1 < g.N; ++ix)
      for (int iy = 1; iy + 1 < g.N; ++iy) {
        const double x = g.axis_coord(ix), y = g.axis_coord(iy);
        const std::size_t f = g.flat(ix, iy);
        const auto fx = link({x + 0.5 * g.h, y}, 0);
        const auto bx = std::conj(link({x - 0.5 * g.h, y}, 0));
        out.comp[0][f] =
            (fx * u.value(g.flat(ix + 1, iy)) - bx * u.value(g.flat(ix - 1, iy))) *
            inv2h;
        const auto fy = link({x, y + 0.5 * g.h}, 1);
        const auto by = std::conj(link({x, y - 0.5 * g.h}, 1));
        out.comp[1][f] =
            (fy * u.value(g.flat(ix, iy + 1)) - by * u.value(g.flat(ix, iy - 1))) *
            inv2h;
      }
  }
  return out;
}

double CovariantGradient::abs_at(std::size_t i) const {
  double a = std::norm(comp[0][i]);
  if (n == 2) a += std::norm(comp[1][i]);
  return std::sqrt(a);
}

double CovariantGradient::re_norm(std::size_t i) const {
  double a = comp[0][i].real() * comp[0][i].real();
  if (n == 2) a += comp[1][i].real() * comp[1][i].real();
  return std::sqrt(a);
}

double CovariantGradient::im_norm(std::size_t i) const {
  double a = comp[0][i].imag() * comp[0][i].imag();
  if (n == 2) a += comp[1][i].imag() * comp[1][i].imag();
  return std::sqrt(a);
}

namespace {

template <class GF>
ModularReport local_magnetic_impl(const GF& F, const GridField& u,
                                  const MagneticPotential& A, bool tilde) {
  const CovariantGradient z = CovariantGradient::compute(u, &A);
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (tilde)
      acc += F.G(z.abs_at(i));
    else
      acc += F.G(z.re_norm(i)) + F.G(z.im_norm(i));
  }
  ModularReport rep;
  rep.kind = tilde ? ModularKind::IGA_tilde : ModularKind::IGA;
  rep.value = acc * u.grid.cell_measure();
  return rep;
}

}  // namespace

ModularReport modular_IGA_local(const OrliczFunction& F, const GridField& u,
                                const MagneticPotential& A, bool tilde) {
  return local_magnetic_impl(F, u, A, tilde);
}

ModularReport modular_IGA_local(const TabulatedGtilde& F, const GridField& u,
                                const MagneticPotential& A, bool tilde) {
  return local_magnetic_impl(F, u, A, tilde);
}

// ---------------------------------------------------------------------------
// shell model
// ---------------------------------------------------------------------------

ShellModel::ShellModel(const OrliczFunction& F, int n, double s, double h) {
  // Psi(alpha) = 1/(1-s) int_0^T Lambda(alpha t) dt/t with T = h^{1-s} and
  // Lambda(b) = int_S G(b|w_n|) dS = c1 K_{n,p1} b^{p1} + c2 K_{n,p2} b^{p2};
  // for powers the t-integral is exact: int_0^T t^{p} dt/t = T^p / p.
  const double T = std::pow(h, 1.0 - s);
  e1 = F.expo1();
  e2 = F.expo2();
  A1 = F.coeff1() * sphere_moment(n, e1) * std::pow(T, e1) / (e1 * (1.0 - s));
  A2 = F.coeff2() == 0.0
           ? 0.0
           : F.coeff2() * sphere_moment(n, e2) * std::pow(T, e2) / (e2 * (1.0 - s));
}

// ---------------------------------------------------------------------------
// fractional modulars
// ---------------------------------------------------------------------------

namespace {

ModularReport fractional_impl(const OrliczFunction& F, const GridField& u,
                              const MagneticPotential* A, double s,
                              const QuadratureConfig& cfg, bool tilde,
                              bool parallel) {
  if (!(s > 0.0 && s < 1.0))
    throw bad_domain("fractional modular: s must lie in (0, 1)");
  const Grid& g = u.grid;
  double r_max = cfg.r_max == 0.0 ? g.L : cfg.r_max;
  require(r_max >= g.L, "fractional modular: truncation radius below grid half-width");
  require(cfg.reduction_block >= 1, "fractional modular: reduction block >= 1");
  const bool useA = A && !A->is_zero();

  PairTables tab;
  tab.build(g, s, useA ? A : nullptr);
  const std::vector<std::size_t> nz = nonzero_indices(u);

  double value = 0.0;
  if (!nz.empty()) {
    const std::size_t P = u.size();
    if (parallel) {
      value = deterministic_block_sum(
          P, static_cast<std::size_t>(cfg.reduction_block),
          [&](std::size_t lo, std::size_t hi) {
            return pair_rows(F, u, useA ? A : nullptr, tab, tilde, nz, lo, hi);
          });
    } else {
      value = pair_rows(F, u, useA ? A : nullptr, tab, tilde, nz, 0, P);
    }
  }

  // near-diagonal shell
  double shell_value = 0.0;
  if (!nz.empty()) {
    const ShellModel shell(F, g.n, s, g.h);
    const CovariantGradient z = CovariantGradient::compute(u, useA ? A : nullptr);
    double acc = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (tilde)
        acc += shell.value(z.abs_at(i));
      else
        acc += shell.value(z.re_norm(i)) + shell.value(z.im_norm(i));
    }
    shell_value = acc * g.cell_measure();
  }

  ModularReport rep;
  rep.kind = useA ? (tilde ? ModularKind::IsGA_tilde : ModularKind::IsGA)
                  : (tilde ? ModularKind::IsG_tilde : ModularKind::IsG);
  rep.s = s;
  rep.shell = cfg.shell;
  rep.value = value;
  if (cfg.shell == ShellPolicy::taylor)
    rep.value += shell_value;
  else
    rep.error_estimate += shell_value;

  // far-field tail, reported but never added to the value
  if (!nz.empty()) {
    const double R = std::max(r_max - u.support_radius, g.h);
    const double Q = tail_Q(R, s, F.p_minus(), F.p_plus());
    const double Mt = tilde_mass(F, u);
    const double sm = sphere_measure(g.n);
    if (tilde) {
      rep.error_estimate += 2.0 * sm * Q * Mt;
    } else {
      double ig = 0.0;
      for (std::size_t i = 0; i < u.size(); ++i)
        ig += F.G(std::abs(u.re[i])) + F.G(std::abs(u.im[i]));
      ig *= g.cell_measure();
      rep.error_estimate += sm * Q * (ig + 2.0 * Mt);
    }
  }
  return rep;
}

}  // namespace

ModularReport modular_IsGA(const OrliczFunction& F, const GridField& u,
                           const MagneticPotential* A, double s,
                           const QuadratureConfig& cfg, bool tilde) {
  return fractional_impl(F, u, A, s, cfg, tilde, /*parallel=*/true);
}

ModularReport modular_IsGA_reference(const OrliczFunction& F,
                                     const GridField& u,
                                     const MagneticPotential* A, double s,
                                     const QuadratureConfig& cfg, bool tilde) {
  return fractional_impl(F, u, A, s, cfg, tilde, /*parallel=*/false);
}

ModularReport evaluate_modular(const OrliczFunction& F, const GridField& u,
                               const MagneticPotential* A, ModularKind kind,
                               double s, const QuadratureConfig& cfg) {
  const bool tilde = modular_kind_is_tilde(kind);
  if (modular_kind_is_fractional(kind)) {
    const MagneticPotential* pa = modular_kind_uses_potential(kind) ? A : nullptr;
    if (modular_kind_uses_potential(kind))
      require(A != nullptr, "modular: potential required for magnetic kind");
    return fractional_impl(F, u, pa, s, cfg, tilde, true);
  }
  if (kind == ModularKind::IG || kind == ModularKind::IG_tilde)
    return modular_IG(F, u, tilde);
  require(A != nullptr, "modular: potential required for magnetic kind");
  return modular_IGA_local(F, u, *A, tilde);
}

// ---------------------------------------------------------------------------
// Luxemburg norm
// ---------------------------------------------------------------------------

double luxemburg_norm(const OrliczFunction& F, const GridField& u,
                      ModularKind kind, double s, const MagneticPotential* A,
                      const QuadratureConfig& cfg) {
  if (u.is_zero()) return 0.0;
  auto modular_of = [&](double lambda) {
    return evaluate_modular(F, scaled(u, 1.0 / lambda), A, kind, s, cfg).value;
  };
  double lo = 1.0, hi = 1.0;
  const double m1 = modular_of(1.0);
  if (!std::isfinite(m1)) throw numeric_error("luxemburg norm: modular not finite");
  int guard = 0;
  if (m1 > 1.0) {
    while (modular_of(hi) > 1.0) {
      hi *= 4.0;
      if (++guard > 400) throw numeric_error("luxemburg norm: bracket failure");
    }
    lo = hi / 4.0;
  } else if (m1 < 1.0) {
    while (modular_of(lo) < 1.0) {
      lo /= 4.0;
      if (++guard > 400) throw numeric_error("luxemburg norm: bracket failure");
    }
    hi = lo * 4.0;
  } else {
    return 1.0;
  }
  while ((hi - lo) > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (modular_of(mid) <= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace fmos
