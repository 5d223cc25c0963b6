#include "skein/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace skein {

namespace {

void check_range(const RootContext& ctx, int c) {
  if (c < 0 || c > ctx.r() - 2)
    throw std::out_of_range("color " + std::to_string(c) + " outside [0, " + std::to_string(ctx.r() - 2) + "]");
}

bool admissible_unchecked(int i, int j, int k, int r) {
  return i + j >= k && j + k >= i && k + i >= j && (i + j + k) % 2 == 0 && i + j + k <= 2 * (r - 2);
}

int parity_sign(int e) { return (e % 2 == 0) ? 1 : -1; }

std::string describe(const ColorTriple& t) {
  return "(" + std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.k) + ")";
}

struct SixjSums {
  std::array<int, 4> T;
  std::array<int, 3> Q;
};

SixjSums sums_of(const ColorSixTuple& s) {
  return {{(s.i + s.j + s.k) / 2, (s.i + s.m + s.n) / 2, (s.j + s.l + s.n) / 2, (s.k + s.l + s.m) / 2},
          {(s.i + s.j + s.l + s.m) / 2, (s.i + s.k + s.l + s.n) / 2, (s.j + s.k + s.m + s.n) / 2}};
}

void require_admissible(const RootContext& ctx, const ColorTriple& t) {
  if (!is_admissible(ctx, t)) throw AdmissibilityError("inadmissible triple " + describe(t));
}

void require_admissible(const RootContext& ctx, const ColorSixTuple& s) {
  if (!is_admissible(ctx, s)) {
    const auto a = s.as_array();
    std::string d = "(";
    for (std::size_t x = 0; x < a.size(); ++x) d += (x ? "," : "") + std::to_string(a[x]);
    throw AdmissibilityError("inadmissible 6-tuple " + d + ")");
  }
}

// [n] in long double.  q = exp(i pi a / r), so n theta reduces exactly modulo
// 2 pi through n a mod 2r.
long double qint_ld(const RootContext& ctx, long long n) {
  const long long two_r = 2LL * ctx.r();
  const long long a = ctx.a_exponent() % (2 * two_r);
  const long double pi = 3.141592653589793238462643383279502884L;
  auto s = [&](long long k) {
    const long long m = ((k * a) % two_r + two_r) % two_r;
    return m == 0 || 2 * m == two_r ? 0.0L : std::sin(pi * static_cast<long double>(m) / ctx.r());
  };
  return s(n) / s(1);
}

long double qfact_ld(const RootContext& ctx, int n) {
  long double f = 1.0L;
  for (int k = 1; k <= n; ++k) f *= qint_ld(ctx, k);
  return f;
}

// Bare alternating sum, linear scale, in long double.
long double zsum_linear(const RootContext& ctx, const SixjSums& ts) {
  const int lo = *std::max_element(ts.T.begin(), ts.T.end());
  const int hi = *std::min_element(ts.Q.begin(), ts.Q.end());
  std::vector<long double> fact(static_cast<std::size_t>(hi + 2), 1.0L);
  for (int n = 1; n <= hi + 1; ++n) fact[n] = fact[n - 1] * qint_ld(ctx, n);
  long double acc = 0.0L;
  for (int z = lo; z <= hi; ++z) {
    const long double top = fact[z + 1];
    if (top == 0.0L) break;  // every later summand carries [r] as well
    long double den = 1.0L;
    for (int a : ts.T) den *= fact[z - a];
    for (int b : ts.Q) den *= fact[b - z];
    acc += (z % 2 == 0 ? top : -top) / den;
  }
  return acc;
}

LogMagnitude zsum_log(const QuantumTable& tab, const SixjSums& ts) {
  const int lo = *std::max_element(ts.T.begin(), ts.T.end());
  const int hi = *std::min_element(ts.Q.begin(), ts.Q.end());
  LogSum acc;
  for (int z = lo; z <= hi; ++z) {
    LogMagnitude term = tab.factorial(z + 1);
    if (term.is_zero()) break;
    for (int a : ts.T) term /= tab.factorial(z - a);
    for (int b : ts.Q) term /= tab.factorial(b - z);
    if (z % 2 != 0) term = -term;
    acc.add(term);
  }
  return acc.value();
}

LogMagnitude sixj_prefactor_log(const QuantumTable& tab, const ColorSixTuple& s, const SixjSums& ts) {
  LogMagnitude p = LogMagnitude::one();
  for (int a : ts.T)
    for (int b : ts.Q) p *= tab.factorial(b - a);
  for (int c : s.as_array()) p /= tab.factorial(c);
  return p;
}

}  // namespace

bool is_admissible(const RootContext& ctx, const ColorTriple& t, Palette palette) {
  check_range(ctx, t.i);
  check_range(ctx, t.j);
  check_range(ctx, t.k);
  if (palette == Palette::even && (t.i % 2 || t.j % 2 || t.k % 2)) return false;
  return admissible_unchecked(t.i, t.j, t.k, ctx.r());
}

bool is_admissible(const RootContext& ctx, const ColorSixTuple& s, Palette palette) {
  bool ok = true;
  for (const auto& f : s.faces()) ok = is_admissible(ctx, f, palette) && ok;
  return ok;
}

long double edge_weight_ext(const RootContext& ctx, int i) { return parity_sign(i) * qint_ld(ctx, i + 1); }

double bracket_cheby(const RootContext& ctx, int i) { return static_cast<double>(edge_weight_ext(ctx, i)); }

long double theta_ext(const RootContext& ctx, const ColorTriple& t) {
  require_admissible(ctx, t);
  const int T = (t.i + t.j + t.k) / 2;
  // (-1)^{-T} = (-1)^T since T is an integer.
  return parity_sign(T) * qfact_ld(ctx, T - t.k) * qfact_ld(ctx, T - t.i) * qfact_ld(ctx, T - t.j) *
         qfact_ld(ctx, T + 1) / (qfact_ld(ctx, t.i) * qfact_ld(ctx, t.j) * qfact_ld(ctx, t.k));
}

double theta(const RootContext& ctx, const ColorTriple& t) { return static_cast<double>(theta_ext(ctx, t)); }

long double theta_appendix_ext(const RootContext& ctx, const ColorTriple& t) {
  require_admissible(ctx, t);
  const int T = (t.i + t.j + t.k) / 2;
  return parity_sign(T) * qfact_ld(ctx, T - t.k) * qfact_ld(ctx, T - t.i) * qfact_ld(ctx, T - t.j) /
         qfact_ld(ctx, T + 1);
}

double theta_appendix(const RootContext& ctx, const ColorTriple& t) {
  return static_cast<double>(theta_appendix_ext(ctx, t));
}

double sixj_summand(const RootContext& ctx, const ColorSixTuple& s, int z) {
  const SixjSums ts = sums_of(s);
  for (int a : ts.T)
    if (z < a) throw std::out_of_range("sixj_summand: z below max T");
  for (int b : ts.Q)
    if (z > b) throw std::out_of_range("sixj_summand: z above min Q");
  const double top = quantum_factorial(ctx, z + 1);
  if (top == 0.0) return 0.0;
  double den = 1.0;
  for (int a : ts.T) den *= quantum_factorial(ctx, z - a);
  for (int b : ts.Q) den *= quantum_factorial(ctx, b - z);
  return parity_sign(z) * top / den;
}

long double sixj_ext(const RootContext& ctx, const ColorSixTuple& s, Normalization norm) {
  require_admissible(ctx, s);
  const SixjSums ts = sums_of(s);
  if (ctx.r() <= kLinearScaleMaxLevel) {
    const long double bare = zsum_linear(ctx, ts);
    if (norm == Normalization::quantum_6j) return bare;
    long double pre = 1.0L;
    for (int a : ts.T)
      for (int b : ts.Q) pre *= qfact_ld(ctx, b - a);
    for (int c : s.as_array()) pre /= qfact_ld(ctx, c);
    return pre * bare;
  }
  const QuantumTable tab(ctx);
  LogMagnitude v = zsum_log(tab, ts);
  if (norm == Normalization::spin_network) v *= sixj_prefactor_log(tab, s, ts);
  return v.to_double();
}

double sixj(const RootContext& ctx, const ColorSixTuple& s, Normalization norm) {
  return static_cast<double>(sixj_ext(ctx, s, norm));
}

long double CoefficientCache::lookup(std::array<Shard, kShards>& shards, std::uint64_t key, auto&& compute) {
  Shard& sh = shards[(key * 0x9E3779B97F4A7C15ULL) >> 60];
  {
    std::lock_guard lock(sh.mu);
    if (auto it = sh.map.find(key); it != sh.map.end()) return it->second;
  }
  const long double v = compute();
  std::lock_guard lock(sh.mu);
  sh.map.emplace(key, v);
  return v;
}

long double CoefficientCache::face_factor(const ColorTriple& t) {
  const std::uint64_t key = (std::uint64_t(t.i) << 42) | (std::uint64_t(t.j) << 21) | std::uint64_t(t.k);
  return lookup(faces_, key, [&] {
    if (norm_ == Normalization::quantum_6j) return theta_appendix_ext(ctx_, t);
    const long double th = theta_ext(ctx_, t);
    if (th == 0.0L) throw std::logic_error("vanishing theta on an admissible triple " + describe(t));
    return 1.0L / th;
  });
}

long double CoefficientCache::tet_factor(const ColorSixTuple& s) {
  std::uint64_t key = 0;
  for (int c : s.as_array()) key = key * 1024 + static_cast<std::uint64_t>(c);
  return lookup(tets_, key, [&] { return sixj_ext(ctx_, s, norm_); });
}

}  // namespace skein
