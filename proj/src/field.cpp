#include "fmos/field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fmos/io.hpp"

namespace fmos {

namespace {

struct ExprSpec {
  enum class Kind { gaussian, bump, parabola, plane } kind;
  double param = 1.0;  // sigma, R, or phase slope c
};

ExprSpec parse_expr(const std::string& expr) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : expr) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i, double fallback) {
    if (parts.size() <= i) return fallback;
    try {
      return std::stod(parts[i]);
    } catch (const std::exception&) {
      throw input_error("field: bad parameter in '" + expr + "'");
    }
  };
  if (parts[0] == "gaussian") return {ExprSpec::Kind::gaussian, num(1, 1.0)};
  if (parts[0] == "bump") return {ExprSpec::Kind::bump, num(1, 1.0)};
  if (parts[0] == "parabola") return {ExprSpec::Kind::parabola, 0.0};
  if (parts[0] == "plane") return {ExprSpec::Kind::plane, num(1, 1.0)};
  throw input_error("unknown test function '" + expr +
                    "' (expected gaussian:s, bump:R, parabola, plane:c)");
}

double radius2(const std::array<double, 2>& x, int n) {
  return n == 1 ? x[0] * x[0] : x[0] * x[0] + x[1] * x[1];
}

}  // namespace

std::complex<double> test_function_value(const std::string& expr,
                                         const std::array<double, 2>& x,
                                         int n) {
  const ExprSpec e = parse_expr(expr);
  const double r2 = radius2(x, n);
  switch (e.kind) {
    case ExprSpec::Kind::gaussian: {
      const double s2 = e.param * e.param;
      return {std::exp(-r2 / s2), 0.0};
    }
    case ExprSpec::Kind::bump: {
      const double q = 1.0 - r2 / (e.param * e.param);
      return {q > 0.0 ? q * q : 0.0, 0.0};
    }
    case ExprSpec::Kind::parabola: {
      require(n == 1, "parabola test function is 1D");
      const double v = 1.0 - x[0] * x[0];
      return {std::abs(x[0]) < 1.0 ? v : 0.0, 0.0};
    }
    case ExprSpec::Kind::plane: {
      const double q = 1.0 - r2;  // bump with R = 1 as the base amplitude
      const double amp = q > 0.0 ? q * q : 0.0;
      const double phase = e.param * (n == 1 ? x[0] : x[0] + x[1]);
      return std::polar(amp, phase);
    }
  }
  return {0.0, 0.0};
}

GridField GridField::zeros(const Grid& g) {
  GridField u;
  u.grid = g;
  u.re.assign(g.points(), 0.0);
  u.im.assign(g.points(), 0.0);
  u.support_radius = 0.0;
  return u;
}

double GridField::max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i)
    m = std::max(m, std::hypot(re[i], im[i]));
  return m;
}

bool GridField::is_zero() const {
  for (std::size_t i = 0; i < re.size(); ++i)
    if (re[i] != 0.0 || im[i] != 0.0) return false;
  return true;
}

double GridField::max_abs_outside_support() const {
  double m = 0.0;
  const double r2max = support_radius * support_radius;
  for (std::size_t i = 0; i < re.size(); ++i) {
    const auto x = grid.point(i);
    if (radius2(x, grid.n) > r2max * (1.0 + 1e-12))
      m = std::max(m, std::hypot(re[i], im[i]));
  }
  return m;
}

void GridField::tighten_support() {
  double r2 = 0.0;
  for (std::size_t i = 0; i < re.size(); ++i) {
    if (re[i] != 0.0 || im[i] != 0.0) {
      const auto x = grid.point(i);
      r2 = std::max(r2, radius2(x, grid.n));
    }
  }
  support_radius = std::sqrt(r2);
}

GridField sample(const std::string& expr, const Grid& g) {
  const ExprSpec e = parse_expr(expr);
  GridField u = GridField::zeros(g);
  // Supports: compact expressions carry their exact radius; the gaussian is
  // clipped two cells inside the box so stencils never leak past the edge.
  double rs;
  switch (e.kind) {
    case ExprSpec::Kind::gaussian:
      rs = g.L - 2.0 * g.h;
      break;
    case ExprSpec::Kind::bump:
      rs = e.param;
      break;
    case ExprSpec::Kind::parabola:
      rs = 1.0;
      break;
    case ExprSpec::Kind::plane:
      rs = 1.0;
      break;
  }
  require(rs <= g.L, "field: support does not fit in the grid");
  const double r2max = rs * rs;
  for (std::size_t i = 0; i < g.points(); ++i) {
    const auto x = g.point(i);
    if (radius2(x, g.n) > r2max) continue;
    const auto v = test_function_value(expr, x, g.n);
    u.re[i] = v.real();
    u.im[i] = v.imag();
  }
  u.support_radius = rs;
  return u;
}

GridField modulus_field(const GridField& u) {
  GridField v = u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    v.re[i] = std::hypot(u.re[i], u.im[i]);
    v.im[i] = 0.0;
  }
  return v;
}

std::pair<GridField, MagneticPotential> gauge_transform(
    const GridField& u, const MagneticPotential& A,
    const std::array<double, 2>& c) {
  require(std::isfinite(c[0]) && std::isfinite(c[1]),
          "gauge transform: non-finite shift");
  GridField v = u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto x = u.grid.point(i);
    const double phase = c[0] * x[0] + (u.grid.n == 2 ? c[1] * x[1] : 0.0);
    const double cs = std::cos(phase), sn = std::sin(phase);
    v.re[i] = cs * u.re[i] - sn * u.im[i];
    v.im[i] = sn * u.re[i] + cs * u.im[i];
  }
  return {std::move(v), A.shifted(c)};
}

GridField scaled(const GridField& u, double alpha) {
  GridField v = u;
  for (std::size_t i = 0; i < u.size(); ++i) {
    v.re[i] *= alpha;
    v.im[i] *= alpha;
  }
  return v;
}

GridField difference(const GridField& a, const GridField& b) {
  require(a.grid.same_layout(b.grid), "field difference: grid mismatch");
  GridField v = a;
  for (std::size_t i = 0; i < a.size(); ++i) {
    v.re[i] -= b.re[i];
    v.im[i] -= b.im[i];
  }
  v.support_radius = std::max(a.support_radius, b.support_radius);
  return v;
}

double cutoff_eta(double r) {
  // q = 1 on [0,1], C^1 ramp 1 - 3(r-1)^2 + 2(r-1)^3 on [1,2], 0 beyond;
  // |q'| <= 3/2, so |grad eta_k| <= 2/k as required.
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  const double t = r - 1.0;
  return 1.0 - 3.0 * t * t + 2.0 * t * t * t;
}

GridField mollify(const GridField& u, double eps) {
  const Grid& g = u.grid;
  if (!(eps >= 2.0 * g.h))
    throw input_error("mollify: kernel not resolvable, eps < 2h");
  if (u.support_radius + eps > g.L + 1e-12)
    throw input_error("mollify: support would leave the grid");

  // normalized bump kernel on the grid
  const int m = static_cast<int>(std::floor(eps / g.h));
  std::vector<double> k1;  // offsets -m..m per axis (built jointly below)
  const auto rho = [&](double r2) {
    // exp(-1/(1-|x/eps|^2)) on |x| < eps
    return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0;
  };

  GridField v = GridField::zeros(g);
  if (g.n == 1) {
    std::vector<double> ker(2 * m + 1);
    double mass = 0.0;
    for (int d = -m; d <= m; ++d) {
      const double x = d * g.h / eps;
      ker[d + m] = rho(x * x);
      mass += ker[d + m] * g.h;
    }
    for (auto& w : ker) w /= mass;
    for (int i = 0; i < g.N; ++i) {
      double sr = 0.0, si = 0.0;
      for (int d = -m; d <= m; ++d) {
        const int j = i + d;
        if (j < 0 || j >= g.N) continue;
        sr += ker[d + m] * u.re[j];
        si += ker[d + m] * u.im[j];
      }
      v.re[i] = sr * g.h;
      v.im[i] = si * g.h;
    }
  } else {
    const int W = 2 * m + 1;
    std::vector<double> ker(static_cast<std::size_t>(W) * W);
    double mass = 0.0;
    for (int dx = -m; dx <= m; ++dx)
      for (int dy = -m; dy <= m; ++dy) {
        const double xx = dx * g.h / eps, yy = dy * g.h / eps;
        const double w = rho(xx * xx + yy * yy);
        ker[static_cast<std::size_t>(dx + m) * W + (dy + m)] = w;
        mass += w * g.h * g.h;
      }
    for (auto& w : ker) w /= mass;
    for (int ix = 0; ix < g.N; ++ix)
      for (int iy = 0; iy < g.N; ++iy) {
        double sr = 0.0, si = 0.0;
        for (int dx = -m; dx <= m; ++dx) {
          const int jx = ix + dx;
          if (jx < 0 || jx >= g.N) continue;
          for (int dy = -m; dy <= m; ++dy) {
            const int jy = iy + dy;
            if (jy < 0 || jy >= g.N) continue;
            const double w = ker[static_cast<std::size_t>(dx + m) * W + (dy + m)];
            const std::size_t j = g.flat(jx, jy);
            sr += w * u.re[j];
            si += w * u.im[j];
          }
        }
        const std::size_t i = g.flat(ix, iy);
        v.re[i] = sr * g.h * g.h;
        v.im[i] = si * g.h * g.h;
      }
  }
  v.support_radius = std::min(u.support_radius + eps, g.L);
  return v;
}

GridField truncate(const GridField& u, double k) {
  require(k > 0.0 && std::isfinite(k), "truncate: k must be positive");
  GridField v = u;
  const Grid& g = u.grid;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto x = g.point(i);
    const double r = std::sqrt(radius2(x, g.n));
    const double eta = cutoff_eta(r / k);
    v.re[i] *= eta;
    v.im[i] *= eta;
  }
  v.support_radius = std::min(u.support_radius, 2.0 * k);
  return v;
}

void write_field_csv(const std::string& path, const GridField& u) {
  const Grid& g = u.grid;
  std::vector<std::string> header =
      g.n == 1 ? std::vector<std::string>{"i", "re", "im"}
               : std::vector<std::string>{"i", "j", "re", "im"};
  CsvWriter csv(path, header);
  for (std::size_t f = 0; f < u.size(); ++f) {
    if (g.n == 1) {
      csv.row({std::to_string(f), fmt_double(u.re[f]), fmt_double(u.im[f])});
    } else {
      csv.row({std::to_string(f / static_cast<std::size_t>(g.N)),
               std::to_string(f % static_cast<std::size_t>(g.N)),
               fmt_double(u.re[f]), fmt_double(u.im[f])});
    }
  }
}

GridField read_field_csv(const std::string& path, const Grid& g,
                         double support_radius) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open field csv '" + path + "'");
  GridField u = GridField::zeros(g);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::size_t i = 0, j = 0;
    double re = 0, im = 0;
    if (g.n == 1) {
      ls >> i >> re >> im;
      if (!ls) throw input_error("bad field csv row: " + line);
      if (i >= u.size()) throw input_error("field csv index out of range");
      u.re[i] = re;
      u.im[i] = im;
    } else {
      ls >> i >> j >> re >> im;
      if (!ls) throw input_error("bad field csv row: " + line);
      const std::size_t f = i * static_cast<std::size_t>(g.N) + j;
      if (f >= u.size()) throw input_error("field csv index out of range");
      u.re[f] = re;
      u.im[f] = im;
    }
  }
  u.support_radius = support_radius;
  return u;
}

void write_grid_manifest(const std::string& path, const Grid& g,
                         double support_radius) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw input_error("cannot write grid manifest '" + path + "'");
  out << "{\"n\": " << g.n << ", \"L\": " << fmt_double(g.L)
      << ", \"N\": " << g.N
      << ", \"support_radius\": " << fmt_double(support_radius) << "}\n";
}

}  // namespace fmos
