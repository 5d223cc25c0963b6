#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "skein/log_magnitude.hpp"

namespace skein {

/// Which family of roots of unity A is drawn from.
///  - su2: A is a primitive 4r-th root (any r >= 3).
///  - so3: A is a primitive 2r-th root (r odd).
enum class Flavor { su2, so3 };

const char* to_string(Flavor f);

/// Thrown when an operation is called with a root of the wrong flavor.
class FlavorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Level r together with a root of unity A.  A is stored as an exact
/// exponent: A = exp(i*pi*a/(2r)), so every power A^n is evaluated after
/// reducing n*a modulo 4r.  Immutable once built.
class RootContext {
 public:
  /// `root_exponent` k selects A = exp(i*pi*k/(2r)) for su2 (gcd(k,4r)=1)
  /// and A = exp(i*pi*k/r) for so3 (gcd(k,2r)=1).  k = 1 is the principal root.
  RootContext(int r, Flavor flavor, int root_exponent = 1);

  static RootContext su2(int r, int root_exponent = 1) { return {r, Flavor::su2, root_exponent}; }
  static RootContext so3(int r, int root_exponent = 1) { return {r, Flavor::so3, root_exponent}; }

  int r() const { return r_; }
  Flavor flavor() const { return flavor_; }
  /// (r-1)/2; only defined for so3.
  int m() const;
  /// Exponent a with A = exp(i*pi*a/(2r)).
  int a_exponent() const { return a_; }
  /// Multiplicative order of A (4r for su2, 2r for so3).
  int order() const { return flavor_ == Flavor::su2 ? 4 * r_ : 2 * r_; }

  /// A^n with exact phase reduction.
  std::complex<double> a_power(std::int64_t n) const;
  std::complex<double> A() const { return a_power(1); }
  std::complex<double> q() const { return a_power(2); }
  std::complex<double> t() const { return a_power(4); }

  /// sin(n*theta) where q = A^2 = exp(i*theta); exactly 0 when r divides n.
  double sin_q(std::int64_t n) const;

  /// [n] = (A^{2n} - A^{-2n}) / (A^2 - A^{-2}).
  double qint(std::int64_t n) const;
  /// log|[n]|; -inf when [n] = 0.
  double log_abs_qint(std::int64_t n) const;

 private:
  int r_;
  Flavor flavor_;
  int a_;
  double sin_theta_;
};

/// Quantum integer [n].
double quantum_int(const RootContext& ctx, std::int64_t n);

/// [n]! = [1][2]...[n]; [0]! = 1.  Exactly 0 for n >= r (contains [r] = 0).
double quantum_factorial(const RootContext& ctx, int n);
LogMagnitude quantum_factorial_log(const RootContext& ctx, int n);

/// {j} = 2 sin(2*j*pi/r) at the principal so3 root; in general 2 sin(j*theta).
/// Requires an so3 context.
double brace(const RootContext& ctx, std::int64_t j);

/// Sign and log of |{1}{2}...{j}|; 0 <= j < r, so3 only.
LogMagnitude brace_factorial_log(const RootContext& ctx, int j);

/// eta = (A^2 - A^{-2}) / sqrt(-2r).
double eta(const RootContext& ctx);
/// eta' = (A^2 - A^{-2}) / sqrt(-r); so3 only.
double eta_prime(const RootContext& ctx);

/// Precomputed log|[n]|, sign([n]) and prefix sums for 0 <= n < 2r.  Lets
/// hot loops evaluate products of consecutive quantum integers in O(1).
class QuantumTable {
 public:
  explicit QuantumTable(const RootContext& ctx);

  const RootContext& context() const { return ctx_; }
  /// [n] for any integer n (periodic lookup).
  double qint(std::int64_t n) const;
  /// [n]! as LogMagnitude for 0 <= n; zero once n >= r.
  LogMagnitude factorial(int n) const;
  /// [lo][lo+1]...[hi] (empty product = 1 when hi < lo); lo >= 1.
  LogMagnitude window(int lo, int hi) const;

 private:
  RootContext ctx_;
  std::vector<double> value_;      // [n], 0 <= n < 2r
  std::vector<double> log_prefix_;  // sum_{k=1}^{n} log|[k]| for n < r
  std::vector<int> neg_prefix_;     // number of negative [k], 1 <= k <= n
};

}  // namespace skein
