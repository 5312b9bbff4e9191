#include "fmos/potential.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fmos {

MagneticPotential MagneticPotential::zero() { return MagneticPotential(); }

MagneticPotential MagneticPotential::constant(const std::array<double, 2>& c,
                                              int n) {
  MagneticPotential A;
  A.kind_ = Kind::constant;
  A.n_ = n;
  A.c_ = c;
  if (n == 1) A.c_[1] = 0.0;
  A.sup_norm_ = std::sqrt(A.c_[0] * A.c_[0] + A.c_[1] * A.c_[1]);
  A.lip_ = 0.0;
  std::ostringstream os;
  os << "const:" << A.c_[0];
  if (n == 2) os << ":" << A.c_[1];
  A.name_ = os.str();
  if (A.sup_norm_ == 0.0) return zero();
  return A;
}

MagneticPotential MagneticPotential::shear(double m, int n) {
  MagneticPotential A;
  A.kind_ = Kind::shear;
  A.n_ = n;
  A.m_ = m;
  A.lip_ = std::abs(m);
  A.sup_norm_ = std::numeric_limits<double>::quiet_NaN();  // set per grid below
  std::ostringstream os;
  os << "shear:" << m;
  A.name_ = os.str();
  return A;
}

MagneticPotential MagneticPotential::sampled(
    const Grid& grid,
    const std::function<std::array<double, 2>(std::array<double, 2>)>& fn) {
  MagneticPotential A;
  A.kind_ = Kind::sampled;
  A.n_ = grid.n;
  A.base_ = grid;
  A.name_ = "sampled";
  const int M = 2 * grid.N - 1;
  const std::size_t total =
      grid.n == 1 ? static_cast<std::size_t>(M)
                  : static_cast<std::size_t>(M) * static_cast<std::size_t>(M);
  double sup2 = 0.0;
  for (int comp = 0; comp < grid.n; ++comp) A.half_[comp].resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::array<double, 2> x{0.0, 0.0};
    if (grid.n == 1) {
      x[0] = -grid.L + (static_cast<double>(idx) + 1.0) * grid.h * 0.5;
    } else {
      const int mx = static_cast<int>(idx) / M;
      const int my = static_cast<int>(idx) % M;
      x[0] = -grid.L + (mx + 1.0) * grid.h * 0.5;
      x[1] = -grid.L + (my + 1.0) * grid.h * 0.5;
    }
    const auto v = fn(x);
    double norm2 = 0.0;
    for (int comp = 0; comp < grid.n; ++comp) {
      A.half_[comp][idx] = v[comp];
      norm2 += v[comp] * v[comp];
    }
    sup2 = std::max(sup2, norm2);
  }
  A.sup_norm_ = std::sqrt(sup2);
  // Lipschitz bound estimated from half-step differences.
  double lip = 0.0;
  const double inv = 2.0 / grid.h;
  if (grid.n == 1) {
    for (int i = 0; i + 1 < M; ++i)
      lip = std::max(lip, std::abs(A.half_[0][i + 1] - A.half_[0][i]) * inv);
  } else {
    for (int mx = 0; mx < M; ++mx)
      for (int my = 0; my < M; ++my) {
        const std::size_t idx = static_cast<std::size_t>(mx) * M + my;
        for (int comp = 0; comp < 2; ++comp) {
          if (mx + 1 < M)
            lip = std::max(lip, std::abs(A.half_[comp][idx + M] - A.half_[comp][idx]) * inv);
          if (my + 1 < M)
            lip = std::max(lip, std::abs(A.half_[comp][idx + 1] - A.half_[comp][idx]) * inv);
        }
      }
  }
  A.lip_ = lip;
  return A;
}

MagneticPotential MagneticPotential::parse(const std::string& spec, int n) {
  if (spec == "zero" || spec.empty()) return zero();
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : spec) {
    if (ch == ':') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  auto num = [&](std::size_t i) {
    try {
      return std::stod(parts.at(i));
    } catch (const std::exception&) {
      throw input_error("potential: bad parameter in '" + spec + "'");
    }
  };
  if (parts[0] == "const") {
    if (parts.size() == 2) return constant({num(1), num(1)}, n);
    if (parts.size() == 3 && n == 2) return constant({num(1), num(2)}, n);
  }
  if (parts[0] == "shear" && parts.size() == 2) return shear(num(1), n);
  throw input_error("unknown potential '" + spec +
                    "' (expected zero, const:c[:cy], shear:m)");
}

std::array<double, 2> MagneticPotential::eval(
    const std::array<double, 2>& x) const {
  switch (kind_) {
    case Kind::zero:
      return {0.0, 0.0};
    case Kind::constant:
      return c_;
    case Kind::shear: {
      // A_1 = m * x_last + optional accumulated constant shift
      const double last = n_ == 1 ? x[0] : x[1];
      return {m_ * last + c_[0], c_[1]};
    }
    case Kind::sampled: {
      auto v = sample_lookup(x);
      v[0] += c_[0];
      v[1] += c_[1];
      return v;
    }
  }
  return {0.0, 0.0};
}

std::array<double, 2> MagneticPotential::sample_lookup(
    const std::array<double, 2>& x) const {
  const int M = 2 * base_.N - 1;
  auto half_index = [&](double coord) {
    const double fm = (coord + base_.L) * 2.0 / base_.h - 1.0;
    const int m = static_cast<int>(std::lround(fm));
    if (m < 0 || m >= M || std::abs(fm - m) > 1e-6)
      throw input_error("sampled potential: point off the half lattice");
    return m;
  };
  std::size_t idx;
  if (n_ == 1) {
    idx = static_cast<std::size_t>(half_index(x[0]));
  } else {
    idx = static_cast<std::size_t>(half_index(x[0])) * M + half_index(x[1]);
  }
  return {half_[0][idx], n_ == 2 ? half_[1][idx] : 0.0};
}

MagneticPotential MagneticPotential::shifted(
    const std::array<double, 2>& c) const {
  MagneticPotential A = *this;
  if (kind_ == Kind::zero) {
    return constant(c, n_);
  }
  if (kind_ == Kind::constant) {
    return constant({c_[0] + c[0], c_[1] + c[1]}, n_);
  }
  A.c_[0] += c[0];
  A.c_[1] += c[1];
  std::ostringstream os;
  os << name_ << "+const";
  A.name_ = os.str();
  const double cn = std::sqrt(c[0] * c[0] + c[1] * c[1]);
  if (std::isfinite(A.sup_norm_)) A.sup_norm_ += cn;  // valid upper bound
  return A;
}

double MagneticPotential::verify_bounds(const Grid& g) const {
  double worst = -std::numeric_limits<double>::infinity();
  double sup = 0.0;
  for (std::size_t i = 0; i < g.points(); ++i) {
    const auto v = eval(g.point(i));
    sup = std::max(sup, std::sqrt(v[0] * v[0] + v[1] * v[1]));
  }
  double bound = sup_norm_;
  if (kind_ == Kind::shear || !std::isfinite(bound))
    bound = std::abs(m_) * g.L * std::sqrt(static_cast<double>(g.n)) +
            std::sqrt(c_[0] * c_[0] + c_[1] * c_[1]);
  worst = sup - bound;
  return worst;
}

}  // namespace fmos
