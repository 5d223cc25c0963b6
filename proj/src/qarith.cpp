#include "skein/qarith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace skein {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t x = a % n;
  return x < 0 ? x + n : x;
}

// sin(pi * k / n) for 0 <= k < 2n with the argument folded into [0, pi/2].
double sin_pi_frac(std::int64_t k, std::int64_t n) {
  int s = 1;
  if (k >= n) {
    k -= n;
    s = -1;
  }
  if (k == 0) return 0.0;
  if (2 * k > n) k = n - k;
  return s * std::sin(std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
}

}  // namespace

const char* to_string(Flavor f) { return f == Flavor::su2 ? "su2" : "so3"; }

RootContext::RootContext(int r, Flavor flavor, int root_exponent) : r_(r), flavor_(flavor) {
  if (r < 3) throw std::invalid_argument("RootContext: level r must be >= 3, got " + std::to_string(r));
  if (flavor == Flavor::su2) {
    if (std::gcd(root_exponent, 4 * r) != 1)
      throw std::invalid_argument("RootContext: exponent must be coprime to 4r for a primitive 4r-th root");
    a_ = static_cast<int>(mod(root_exponent, 4 * r));
  } else {
    if (r % 2 == 0) throw FlavorError("RootContext: so3 roots require odd r, got " + std::to_string(r));
    if (std::gcd(root_exponent, 2 * r) != 1)
      throw std::invalid_argument("RootContext: exponent must be coprime to 2r for a primitive 2r-th root");
    a_ = static_cast<int>(mod(2 * static_cast<std::int64_t>(root_exponent), 4 * r));
  }
  sin_theta_ = sin_q(1);
}

int RootContext::m() const {
  if (flavor_ != Flavor::so3) throw FlavorError("RootContext::m is only defined for so3 roots");
  return (r_ - 1) / 2;
}

std::complex<double> RootContext::a_power(std::int64_t n) const {
  const std::int64_t k = mod(mod(n, 4 * r_) * a_, 4 * r_);
  const double c = sin_pi_frac(mod(k + r_, 4 * r_), 2 * r_);  // cos(x) = sin(x + pi/2)
  const double s = sin_pi_frac(k, 2 * r_);
  return {c, s};
}

double RootContext::sin_q(std::int64_t n) const {
  // q = A^2 = exp(i*pi*a/r); sin(n*theta) = sin(pi * n*a / r).
  return sin_pi_frac(mod(mod(n, 2 * r_) * a_, 2 * r_), r_);
}

double RootContext::qint(std::int64_t n) const { return sin_q(n) / sin_theta_; }

double RootContext::log_abs_qint(std::int64_t n) const {
  const double s = sin_q(n);
  if (s == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(std::abs(s)) - std::log(std::abs(sin_theta_));
}

double quantum_int(const RootContext& ctx, std::int64_t n) { return ctx.qint(n); }

double quantum_factorial(const RootContext& ctx, int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial: n must be >= 0");
  if (n >= ctx.r()) return 0.0;
  double p = 1.0;
  for (int k = 2; k <= n; ++k) p *= ctx.qint(k);
  return p;
}

LogMagnitude quantum_factorial_log(const RootContext& ctx, int n) {
  if (n < 0) throw std::invalid_argument("quantum_factorial_log: n must be >= 0");
  if (n >= ctx.r()) return LogMagnitude::zero();
  LogMagnitude p = LogMagnitude::one();
  for (int k = 2; k <= n; ++k) p *= LogMagnitude::from_double(ctx.qint(k));
  return p;
}

double brace(const RootContext& ctx, std::int64_t j) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("brace: requires an so3 root");
  return 2.0 * ctx.sin_q(j);
}

LogMagnitude brace_factorial_log(const RootContext& ctx, int j) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("brace_factorial_log: requires an so3 root");
  if (j < 0 || j >= ctx.r())
    throw std::out_of_range("brace_factorial_log: need 0 <= j < r, got j=" + std::to_string(j));
  LogMagnitude p = LogMagnitude::one();
  for (int k = 1; k <= j; ++k) p *= LogMagnitude::from_double(2.0 * ctx.sin_q(k));
  return p;
}

double eta(const RootContext& ctx) {
  // A^2 - A^{-2} = 2i sin(theta) and sqrt(-2r) = i sqrt(2r).
  return 2.0 * ctx.sin_q(1) / std::sqrt(2.0 * ctx.r());
}

double eta_prime(const RootContext& ctx) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("eta_prime: requires an so3 root");
  return 2.0 * ctx.sin_q(1) / std::sqrt(static_cast<double>(ctx.r()));
}

QuantumTable::QuantumTable(const RootContext& ctx) : ctx_(ctx) {
  const int r = ctx.r();
  value_.resize(2 * r);
  for (int n = 0; n < 2 * r; ++n) value_[n] = ctx.qint(n);
  log_prefix_.assign(r, 0.0);
  neg_prefix_.assign(r, 0);
  for (int n = 1; n < r; ++n) {
    log_prefix_[n] = log_prefix_[n - 1] + std::log(std::abs(value_[n]));
    neg_prefix_[n] = neg_prefix_[n - 1] + (value_[n] < 0 ? 1 : 0);
  }
}

double QuantumTable::qint(std::int64_t n) const {
  return value_[static_cast<std::size_t>(mod(n, 2 * static_cast<std::int64_t>(ctx_.r())))];
}

LogMagnitude QuantumTable::factorial(int n) const {
  if (n < 0) throw std::invalid_argument("QuantumTable::factorial: n must be >= 0");
  if (n >= ctx_.r()) return LogMagnitude::zero();
  return {neg_prefix_[n] % 2 == 0 ? 1 : -1, log_prefix_[n]};
}

LogMagnitude QuantumTable::window(int lo, int hi) const {
  if (hi < lo) return LogMagnitude::one();
  if (lo < 1) throw std::invalid_argument("QuantumTable::window: lo must be >= 1");
  const int r = ctx_.r();
  if (hi < r) {
    return {(neg_prefix_[hi] - neg_prefix_[lo - 1]) % 2 == 0 ? 1 : -1, log_prefix_[hi] - log_prefix_[lo - 1]};
  }
  // A multiple of r inside the window makes the product vanish.
  if (lo <= r * (hi / r)) return LogMagnitude::zero();
  LogMagnitude p = LogMagnitude::one();
  for (int k = lo; k <= hi; ++k) p *= LogMagnitude::from_double(qint(k));
  return p;
}

}  // namespace skein
