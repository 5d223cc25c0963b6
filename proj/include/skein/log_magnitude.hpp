#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

namespace skein {

/// Signed real number stored as sign and natural log of its absolute value.
/// Used for products of many quantum integers that leave double range.
struct LogMagnitude {
  int sign = 0;
  double log_abs = -std::numeric_limits<double>::infinity();

  static LogMagnitude zero() { return {}; }
  static LogMagnitude one() { return {1, 0.0}; }
  static LogMagnitude from_double(double x) {
    if (x == 0.0) return zero();
    return {x < 0 ? -1 : 1, std::log(std::abs(x))};
  }

  bool is_zero() const { return sign == 0; }
  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

  LogMagnitude& operator*=(const LogMagnitude& o) {
    sign *= o.sign;
    log_abs = sign == 0 ? -std::numeric_limits<double>::infinity() : log_abs + o.log_abs;
    return *this;
  }
  LogMagnitude& operator/=(const LogMagnitude& o);
  friend LogMagnitude operator*(LogMagnitude a, const LogMagnitude& b) { return a *= b; }
  friend LogMagnitude operator/(LogMagnitude a, const LogMagnitude& b) { return a /= b; }
  LogMagnitude pow(int e) const;
  LogMagnitude operator-() const { return {-sign, log_abs}; }
};

/// Signed sum of LogMagnitude terms. Terms are rescaled against the running
/// maximum and added with Neumaier compensation.
class LogSum {
 public:
  void add(const LogMagnitude& term);
  void add(double x) { add(LogMagnitude::from_double(x)); }
  LogMagnitude value() const;
  std::size_t count() const { return count_; }

 private:
  void rescale(double new_scale);
  double scale_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  double comp_ = 0.0;
  std::size_t count_ = 0;
};

/// Complex number as mantissa * exp(log_scale); |mantissa| is kept near 1.
struct ScaledComplex {
  std::complex<double> mantissa{0.0, 0.0};
  double log_scale = 0.0;

  static ScaledComplex from(std::complex<double> z);
  static ScaledComplex from(const LogMagnitude& x);
  static ScaledComplex zero() { return {}; }

  bool is_zero() const { return mantissa == std::complex<double>(0.0, 0.0); }
  /// log|z|; -inf for zero.
  double log_abs() const;
  std::complex<double> value() const { return mantissa * std::exp(log_scale); }

  ScaledComplex& normalize();
  ScaledComplex& operator*=(const ScaledComplex& o);
  ScaledComplex& operator*=(std::complex<double> z);
  ScaledComplex& operator/=(const ScaledComplex& o);
  ScaledComplex& operator+=(const ScaledComplex& o);
  friend ScaledComplex operator*(ScaledComplex a, const ScaledComplex& b) { return a *= b; }
  friend ScaledComplex operator/(ScaledComplex a, const ScaledComplex& b) { return a /= b; }
  friend ScaledComplex operator+(ScaledComplex a, const ScaledComplex& b) { return a += b; }
  ScaledComplex operator-() const { return {-mantissa, log_scale}; }
};

/// Neumaier-compensated running sum of doubles.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Pairwise (tree) reduction of partial sums; the order only depends on the
/// input length, so results are reproducible.
double pairwise_sum(std::vector<double> parts);

}  // namespace skein
