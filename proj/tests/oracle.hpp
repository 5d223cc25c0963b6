#pragma once

// Independent reference arithmetic for tests: 50-digit sines, no shared code
// with the library's reduction logic.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <string>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_50;

inline big pi() { return boost::multiprecision::default_ops::get_constant_pi<big::backend_type>(); }

/// [n] at q = exp(i*pi*step/r): sin(n*step*pi/r)/sin(step*pi/r).
/// step = 1 for the su2 principal root, 2 for so3.
inline big qint(long n, int r, int step) {
  const big th = pi() * step / r;
  return sin(th * n) / sin(th);
}

inline big qfact(int n, int r, int step) {
  big p = 1;
  for (int k = 2; k <= n; ++k) p *= qint(k, r, step);
  return p;
}

inline double d(const big& x) { return x.convert_to<double>(); }

inline std::string fixture(const std::string& name) { return std::string(SKEIN_FIXTURE_DIR) + "/" + name; }

}  // namespace oracle
