#include "skein/log_magnitude.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein {

LogMagnitude& LogMagnitude::operator/=(const LogMagnitude& o) {
  if (o.sign == 0) throw std::domain_error("LogMagnitude: division by zero");
  sign *= o.sign;
  if (sign != 0) log_abs -= o.log_abs;
  return *this;
}

LogMagnitude LogMagnitude::pow(int e) const {
  if (e == 0) return one();
  if (sign == 0) {
    if (e < 0) throw std::domain_error("LogMagnitude: zero to a negative power");
    return zero();
  }
  return {(e % 2 != 0) ? sign : 1, log_abs * e};
}

void LogSum::rescale(double new_scale) {
  if (std::isfinite(scale_)) {
    const double f = std::exp(scale_ - new_scale);
    sum_ *= f;
    comp_ *= f;
  }
  scale_ = new_scale;
}

void LogSum::add(const LogMagnitude& term) {
  ++count_;
  if (term.sign == 0) return;
  if (term.log_abs > scale_) rescale(term.log_abs);
  const double x = term.sign * std::exp(term.log_abs - scale_);
  const double t = sum_ + x;
  if (std::abs(sum_) >= std::abs(x)) {
    comp_ += (sum_ - t) + x;
  } else {
    comp_ += (x - t) + sum_;
  }
  sum_ = t;
}

LogMagnitude LogSum::value() const {
  const double s = sum_ + comp_;
  if (s == 0.0 || !std::isfinite(scale_)) return LogMagnitude::zero();
  return {s < 0 ? -1 : 1, scale_ + std::log(std::abs(s))};
}

ScaledComplex ScaledComplex::from(std::complex<double> z) {
  ScaledComplex s{z, 0.0};
  return s.normalize();
}

ScaledComplex ScaledComplex::from(const LogMagnitude& x) {
  if (x.sign == 0) return zero();
  return {std::complex<double>(x.sign, 0.0), x.log_abs};
}

double ScaledComplex::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  return log_scale + std::log(std::abs(mantissa));
}

ScaledComplex& ScaledComplex::normalize() {
  const double a = std::abs(mantissa);
  if (a == 0.0) {
    log_scale = 0.0;
    return *this;
  }
  // Only renormalize when the mantissa drifts far from 1; keeps exact values exact.
  if (a > 1e100 || a < 1e-100) {
    const double l = std::log(a);
    mantissa /= a;
    log_scale += l;
  }
  return *this;
}

ScaledComplex& ScaledComplex::operator*=(const ScaledComplex& o) {
  mantissa *= o.mantissa;
  log_scale += o.log_scale;
  return normalize();
}

ScaledComplex& ScaledComplex::operator*=(std::complex<double> z) {
  mantissa *= z;
  return normalize();
}

ScaledComplex& ScaledComplex::operator/=(const ScaledComplex& o) {
  if (o.is_zero()) throw std::domain_error("ScaledComplex: division by zero");
  mantissa /= o.mantissa;
  log_scale -= o.log_scale;
  return normalize();
}

ScaledComplex& ScaledComplex::operator+=(const ScaledComplex& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (o.log_scale > log_scale) {
    mantissa = mantissa * std::exp(log_scale - o.log_scale) + o.mantissa;
    log_scale = o.log_scale;
  } else {
    mantissa += o.mantissa * std::exp(o.log_scale - log_scale);
  }
  return normalize();
}

double pairwise_sum(std::vector<double> parts) {
  if (parts.empty()) return 0.0;
  while (parts.size() > 1) {
    std::vector<double> next;
    next.reserve((parts.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < parts.size(); i += 2) next.push_back(parts[i] + parts[i + 1]);
    if (parts.size() % 2 == 1) next.push_back(parts.back());
    parts = std::move(next);
  }
  return parts.front();
}

}  // namespace skein
