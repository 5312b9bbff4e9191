#include "fmos/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fmos/numerics.hpp"

namespace fmos {

OrliczFunction::OrliczFunction(std::string name, double c1, double p1,
                               double c2, double p2)
    : name_(std::move(name)), c1_(c1), p1_(p1), c2_(c2), p2_(p2) {
  require(c1_ > 0.0 && c2_ >= 0.0, "orlicz: coefficients must be positive");
  require(p1_ > 1.0, "orlicz: lower exponent must exceed 1 (condition on growth)");
  require(p2_ >= p1_, "orlicz: exponents out of order");
  require(std::isfinite(p2_), "orlicz: upper exponent must be finite");
  if (c2_ == 0.0) p2_ = p1_;
  delta2_ = std::pow(2.0, p2_);
}

OrliczFunction OrliczFunction::power(double p) {
  std::ostringstream os;
  os << "power:" << p;
  return OrliczFunction(os.str(), 1.0 / p, p, 0.0, p);
}

OrliczFunction OrliczFunction::power_pure(double p) {
  std::ostringstream os;
  os << "powerp:" << p;
  return OrliczFunction(os.str(), 1.0, p, 0.0, p);
}

OrliczFunction OrliczFunction::power_half(double p) {
  std::ostringstream os;
  os << "powerp_half:" << p;
  return OrliczFunction(os.str(), 0.5, p, 0.0, p);
}

OrliczFunction OrliczFunction::blend(double p, double q) {
  if (q < p) std::swap(p, q);
  std::ostringstream os;
  os << "blend:" << p << ":" << q;
  return OrliczFunction(os.str(), 1.0, p, 1.0, q);
}

OrliczFunction OrliczFunction::parse(const std::string& spec) {
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
      std::size_t pos = 0;
      double v = std::stod(parts.at(i), &pos);
      if (pos != parts[i].size()) throw std::invalid_argument(parts[i]);
      return v;
    } catch (const std::exception&) {
      throw input_error("orlicz family: bad parameter in '" + spec + "'");
    }
  };
  if (parts[0] == "power" && parts.size() == 2) return power(num(1));
  if (parts[0] == "powerp" && parts.size() == 2) return power_pure(num(1));
  if (parts[0] == "powerp_half" && parts.size() == 2) return power_half(num(1));
  if (parts[0] == "blend" && parts.size() == 3) return blend(num(1), num(2));
  throw input_error("unknown orlicz family '" + spec +
                    "' (expected power:p, powerp:p, powerp_half:p, blend:p:q)");
}

std::pair<double, double> evaluate(const OrliczFunction& F, double t) {
  if (!std::isfinite(t)) throw input_error("orlicz evaluate: non-finite argument");
  if (t < 0.0) throw bad_domain("orlicz evaluate: negative argument");
  return {F.G(t), F.g(t)};
}

double legendre_transform(const OrliczFunction& F, double s) {
  if (!std::isfinite(s)) throw input_error("legendre transform: non-finite argument");
  if (s < 0.0) throw bad_domain("legendre transform: negative argument");
  if (s == 0.0) return 0.0;  // supremum attained as t -> 0
  // g is increasing with g(0) = 0 and g(inf) = inf; the supremum of
  // s t - G(t) is attained where g(t) = s.
  const double tol = 1e-12 * (1.0 + s);
  const double t = solve_monotone(
      s, 1e-12, 1e12, tol, 200, [&](double x) { return F.g(x); });
  return s * t - F.G(t);
}

std::pair<double, double> estimate_indices(const OrliczFunction& F,
                                           std::span<const double> t_grid) {
  if (t_grid.empty()) throw input_error("index estimate: empty grid");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double t : t_grid) {
    require(t > 0.0 && std::isfinite(t), "index estimate: grid must be positive");
    const double Gt = F.G(t);
    if (Gt <= 0.0)
      throw numeric_error("index estimate: degenerate function, G(t) = 0 at t = " +
                          std::to_string(t));
    const double r = t * F.g(t) / Gt;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return {lo, hi};
}

double delta2_constant(const OrliczFunction& F,
                       std::span<const double> t_grid) {
  if (t_grid.empty()) throw input_error("delta2 estimate: empty grid");
  double worst = 0.0;
  for (double t : t_grid) {
    require(t > 0.0 && std::isfinite(t), "delta2 estimate: grid must be positive");
    const double Gt = F.G(t);
    if (Gt <= 0.0)
      throw numeric_error("delta2 estimate: degenerate function at t = " +
                          std::to_string(t));
    worst = std::max(worst, F.G(2.0 * t) / Gt);
  }
  return worst;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  require(lo > 0 && hi > lo && count >= 2, "log grid: bad parameters");
  std::vector<double> out(count);
  const double step = std::log(hi / lo) / (count - 1);
  for (int i = 0; i < count; ++i) out[i] = lo * std::exp(step * i);
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace fmos
