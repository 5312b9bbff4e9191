#include "fmos/numerics.hpp"

#include <cmath>
#include <cstddef>

#include "fmos/common.hpp"

namespace fmos {

MonotoneCubic::MonotoneCubic(std::vector<double> xs, std::vector<double> ys)
    : x_(std::move(xs)), y_(std::move(ys)) {
  const std::size_t n = x_.size();
  require(n >= 2 && y_.size() == n, "monotone cubic needs >= 2 nodes");
  std::vector<double> h(n - 1), slope(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    require(h[i] > 0, "monotone cubic grid must be strictly increasing");
    slope[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  d_.assign(n, 0.0);
  d_[0] = slope[0];
  d_[n - 1] = slope[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (slope[i - 1] * slope[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      // weighted harmonic mean (Fritsch-Carlson/Fritsch-Butland)
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / slope[i - 1] + w2 / slope[i]);
    }
  }
  // clamp end derivatives to keep the end segments monotone
  auto clamp_end = [](double& d, double s) {
    if (s == 0.0)
      d = 0.0;
    else if (d / s < 0.0)
      d = 0.0;
    else if (std::abs(d) > 3.0 * std::abs(s))
      d = 3.0 * s;
  };
  clamp_end(d_[0], slope[0]);
  clamp_end(d_[n - 1], slope[n - 2]);
}

std::size_t MonotoneCubic::segment(double x) const {
  std::size_t lo = 0, hi = x_.size() - 1;
  while (hi - lo > 1) {
    const std::size_t mid = (lo + hi) / 2;
    if (x_[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  return lo;
}

double MonotoneCubic::operator()(double x) const {
  const std::size_t n = x_.size();
  if (x <= x_.front()) return y_.front() + d_.front() * (x - x_.front());
  if (x >= x_.back()) return y_.back() + d_.back() * (x - x_.back());
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  (void)n;
  return h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
}

double MonotoneCubic::derivative(double x) const {
  if (x <= x_.front()) return d_.front();
  if (x >= x_.back()) return d_.back();
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h;
  const double dh11 = 3 * t2 - 2 * t;
  return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

double solve_monotone(double y, double lo, double hi, double tol_abs,
                      int max_iter, const std::function<double(double)>& f) {
  int guard = 0;
  while (f(hi) < y) {
    hi *= 8.0;
    if (++guard > 80)
      throw numeric_error("monotone solve: bracketing failed, interval [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  guard = 0;
  while (f(lo) > y) {
    lo /= 8.0;
    if (++guard > 80)
      throw numeric_error("monotone solve: bracketing failed, interval [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  double mid = 0.5 * (lo + hi);
  for (int it = 0; it < max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = f(mid);
    if (std::abs(v - y) <= tol_abs) break;
    if (v < y)
      lo = mid;
    else
      hi = mid;
  }
  return mid;
}

}  // namespace fmos
