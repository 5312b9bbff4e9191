#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace fmos {

// Error taxonomy used across the library.
//   input_error   - malformed or inconsistent caller input
//   bad_domain    - argument outside the mathematical domain of an operation
//   numeric_error - a numerical procedure failed (bracketing, convergence, ...)
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct input_error : error {
  using error::error;
};

struct bad_domain : error {
  using error::error;
};

struct numeric_error : error {
  using error::error;
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw input_error(msg);
}

inline bool finite(double x) { return std::isfinite(x); }

// Surface measure of the unit sphere S^{n-1}: |S^0| = 2, |S^1| = 2*pi.
inline double sphere_measure(int n) {
  return n == 1 ? 2.0 : 2.0 * 3.14159265358979323846;
}

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace fmos
