#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracle.hpp"
#include "skein/qarith.hpp"

using namespace skein;
using doctest::Approx;

TEST_CASE("root context validation") {
  CHECK_THROWS_AS(RootContext(2, Flavor::su2), std::invalid_argument);
  CHECK_THROWS_AS(RootContext::so3(6), FlavorError);
  CHECK_THROWS_AS(RootContext(5, Flavor::su2, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootContext(5, Flavor::so3, 5), std::invalid_argument);
  CHECK_NOTHROW(RootContext(5, Flavor::so3, 3));
  CHECK_THROWS_AS(RootContext::su2(7).m(), FlavorError);
  CHECK(RootContext::so3(7).m() == 3);
}

TEST_CASE("A is primitive of the stated order") {
  for (int r = 3; r <= 15; ++r) {
    for (Flavor f : {Flavor::su2, Flavor::so3}) {
      if (f == Flavor::so3 && r % 2 == 0) continue;
      const RootContext ctx(r, f);
      const int ord = ctx.order();
      CHECK(std::abs(ctx.a_power(ord) - 1.0) < 1e-12);
      CHECK(std::abs(std::pow(ctx.A(), ord) - 1.0) < 1e-12);
      for (int k = 1; k < ord; ++k) {
        if (ord % k == 0) CHECK(std::abs(ctx.a_power(k) - 1.0) > 1e-12);
      }
      // q^2 is a primitive r-th root
      for (int k = 1; k < r; ++k) CHECK(std::abs(ctx.a_power(4 * k) - 1.0) > 1e-12);
      CHECK(std::abs(ctx.q() - ctx.A() * ctx.A()) < 1e-15);
      CHECK(std::abs(ctx.t() - ctx.q() * ctx.q()) < 1e-15);
    }
  }
}

TEST_CASE("quantum integers") {
  const auto c5 = RootContext::so3(5);
  CHECK(quantum_int(c5, 1) == 1.0);
  CHECK(quantum_int(c5, 0) == 0.0);
  CHECK(quantum_int(c5, 2) == Approx(0.6180339887498949).epsilon(1e-14));
  CHECK(quantum_int(c5, 5) == 0.0);
  for (int r : {5, 7, 9, 11, 25}) {
    const auto c = RootContext::so3(r);
    const auto s = RootContext::su2(r);
    for (int n = -2 * r; n <= 2 * r; ++n) {
      CHECK(c.qint(n) == Approx(oracle::d(oracle::qint(n, r, 2))).epsilon(1e-12).scale(1.0));
      CHECK(s.qint(n) == Approx(oracle::d(oracle::qint(n, r, 1))).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("quantum integer against the defining ratio") {
  const auto c = RootContext(9, Flavor::su2, 5);
  const auto den = c.a_power(2) - c.a_power(-2);
  for (int n = -20; n <= 20; ++n) {
    const auto v = (c.a_power(2 * n) - c.a_power(-2 * n)) / den;
    CHECK(std::abs(v.imag()) < 1e-12);
    CHECK(c.qint(n) == Approx(v.real()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("quantum integer symmetries at so3 roots") {
  for (int r = 5; r <= 31; r += 2) {
    const auto c = RootContext::so3(r);
    for (int n = 0; n <= r; ++n) {
      CHECK(c.qint(n) == Approx(-c.qint(-n)).epsilon(1e-12).scale(1.0));
      // theta = 2pi/r here, so the reflection flips the sign; the modulus is preserved.
      CHECK(c.qint(r - n) == Approx(-c.qint(n)).epsilon(1e-12).scale(1.0));
      CHECK(RootContext::su2(r).qint(r - n) == Approx(RootContext::su2(r).qint(n)).epsilon(1e-12).scale(1.0));
    }
    for (int n = 0; n < r; ++n) CHECK(c.qint(n) * brace(c, 1) == Approx(brace(c, n)).epsilon(1e-12).scale(1.0));
    const int m = c.m();
    for (int i = 0; i <= m - 1; ++i)
      CHECK(std::abs(c.qint(m + i + 1)) == Approx(std::abs(c.qint(m - i))).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("quantum factorial") {
  const auto c7 = RootContext::so3(7);
  CHECK(quantum_factorial(c7, 0) == 1.0);
  CHECK(quantum_factorial(c7, 1) == 1.0);
  const double expect = oracle::d(oracle::qint(2, 7, 2) * oracle::qint(3, 7, 2));
  CHECK(quantum_factorial(c7, 3) == Approx(expect).epsilon(1e-13));
  CHECK(quantum_factorial(c7, 7) == 0.0);
  CHECK(quantum_factorial(c7, 9) == 0.0);
  CHECK_THROWS(quantum_factorial(c7, -1));
  for (int n = 0; n < 7; ++n)
    CHECK(quantum_factorial_log(c7, n).to_double() == Approx(quantum_factorial(c7, n)).epsilon(1e-12));
  CHECK(quantum_factorial_log(c7, 7).is_zero());
}

TEST_CASE("braces") {
  const auto c5 = RootContext::so3(5);
  CHECK(brace(c5, 0) == 0.0);
  CHECK(brace(c5, 1) == Approx(1.9021130325903071).epsilon(1e-14));
  CHECK(brace(RootContext::so3(7), 7) == 0.0);
  CHECK_THROWS_AS(brace(RootContext::su2(5), 1), FlavorError);
}

TEST_CASE("brace factorial log") {
  const auto c7 = RootContext::so3(7);
  const auto zero = brace_factorial_log(c7, 0);
  CHECK(zero.sign == 1);
  CHECK(zero.log_abs == 0.0);
  const double pi = std::numbers::pi;
  const double expect =
      std::log(8.0 * std::abs(std::sin(2 * pi / 7) * std::sin(4 * pi / 7) * std::sin(6 * pi / 7)));
  CHECK(brace_factorial_log(c7, 3).log_abs == Approx(expect).epsilon(1e-13));
  CHECK_THROWS_AS(brace_factorial_log(c7, 7), std::out_of_range);
  CHECK_THROWS_AS(brace_factorial_log(RootContext::su2(7), 2), FlavorError);

  // log scale agrees with the linear product while it is representable
  for (int r : {5, 11, 51, 101}) {
    const auto c = RootContext::so3(r);
    double lin = 1.0;
    for (int j = 0; j < r; ++j) {
      if (j > 0) lin *= brace(c, j);
      const auto lm = brace_factorial_log(c, j);
      CHECK(lm.sign == (lin < 0 ? -1 : 1));
      CHECK(std::exp(lm.log_abs) == Approx(std::abs(lin)).epsilon(1e-9));
    }
  }
}

TEST_CASE("eta constants") {
  CHECK(eta(RootContext::su2(3)) == Approx(0.7071067811865476).epsilon(1e-14));
  CHECK(eta_prime(RootContext::so3(5)) == Approx(0.8506508083520400).epsilon(1e-14));
  CHECK_THROWS_AS(eta_prime(RootContext::su2(5)), FlavorError);
  // eta_r at the 2r-th root factors as eta_3 * eta'_r
  for (int r = 5; r <= 15; r += 2) {
    const auto c = RootContext::so3(r);
    CHECK(eta(c) == Approx(eta(RootContext::su2(3)) * eta_prime(c)).epsilon(1e-13));
  }
  double prev = 10;
  for (int r = 5; r <= 2001; r += 2) {
    const double e = eta_prime(RootContext::so3(r));
    CHECK(e > 0);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(std::log(prev * prev) / 2001 > -0.01);
}

TEST_CASE("quantum table") {
  for (Flavor f : {Flavor::su2, Flavor::so3}) {
    const RootContext c(11, f);
    const QuantumTable tab(c);
    for (int n = -30; n <= 30; ++n) CHECK(tab.qint(n) == c.qint(n));
    for (int n = 0; n < 15; ++n) {
      const double lin = quantum_factorial(c, n);
      CHECK(tab.factorial(n).to_double() == Approx(lin).epsilon(1e-12).scale(1.0));
    }
    for (int lo = 1; lo < 25; ++lo) {
      for (int hi = lo - 1; hi < 30; ++hi) {
        double lin = 1.0;
        for (int k = lo; k <= hi; ++k) lin *= c.qint(k);
        CHECK(tab.window(lo, hi).to_double() == Approx(lin).epsilon(1e-11).scale(1.0));
      }
    }
  }
}
