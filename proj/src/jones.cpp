#include "skein/jones.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace skein {

namespace {

// Running product and sum kept at a shared power-of-two scale so the Habiro
// sums stay in double arithmetic far past the overflow point.
class ScaledSeries {
 public:
  void start(double first) { sum_ = first; }
  void multiply(double f) {
    prod_ *= f;
    if (std::abs(prod_) > 0x1p+500) {
      prod_ = std::ldexp(prod_, -500);
      sum_ = std::ldexp(sum_, -500);
      exp2_ += 500;
    }
  }
  void add_product() { sum_ += prod_; }
  bool product_vanished() const { return prod_ == 0.0; }
  LogMagnitude value() const {
    LogMagnitude v = LogMagnitude::from_double(sum_);
    if (!v.is_zero()) v.log_abs += exp2_ * std::log(2.0);
    return v;
  }

 private:
  double prod_ = 1.0;
  double sum_ = 0.0;
  int exp2_ = 0;
};

void check_color(int i, const char* who) {
  if (i < 1) throw std::invalid_argument(std::string(who) + ": colors must be >= 1, got " + std::to_string(i));
}

}  // namespace

BraceTable::BraceTable(const RootContext& ctx) : ctx_(ctx) {
  const int n = 2 * ctx.r();
  log_prefix_.assign(n, 0.0);
  neg_prefix_.assign(n, 0);
  zero_prefix_.assign(n, 0);
  for (int u = 1; u < n; ++u) {
    const double b = 2.0 * ctx.sin_q(u);
    log_prefix_[u] = log_prefix_[u - 1] + (b == 0.0 ? 0.0 : std::log(std::abs(b)));
    neg_prefix_[u] = neg_prefix_[u - 1] + (b < 0 ? 1 : 0);
    zero_prefix_[u] = zero_prefix_[u - 1] + (b == 0.0 ? 1 : 0);
  }
}

LogMagnitude BraceTable::window(int lo, int hi) const {
  if (hi < lo) return LogMagnitude::one();
  if (lo < 1 || hi >= static_cast<int>(log_prefix_.size()))
    throw std::out_of_range("BraceTable::window: need 1 <= lo and hi < 2r");
  if (zero_prefix_[hi] != zero_prefix_[lo - 1]) return LogMagnitude::zero();
  return {(neg_prefix_[hi] - neg_prefix_[lo - 1]) % 2 == 0 ? 1 : -1, log_prefix_[hi] - log_prefix_[lo - 1]};
}

double jones_unknot(const RootContext& ctx, int i) { return ctx.qint(i); }

LogMagnitude habiro_fig8(const RootContext& ctx, int i) {
  check_color(i, "habiro_fig8");
  // (t^{a/2} - t^{-a/2}) = A^{2a} - A^{-2a} = 2i sin(a theta); two such factors give -4 sin sin.
  ScaledSeries s;
  s.start(1.0);
  for (int k = 1; k <= i - 1; ++k) {
    s.multiply(-4.0 * ctx.sin_q(i - k) * ctx.sin_q(i + k));
    if (s.product_vanished()) break;
    s.add_product();
  }
  return s.value();
}

LogMagnitude jones_fig8(const RootContext& ctx, int i) {
  return habiro_fig8(ctx, i) * LogMagnitude::from_double(ctx.qint(i));
}

std::vector<LogMagnitude> borromean_terms(const BraceTable& tab, int k, int l, int n) {
  check_color(k, "jones_borromean");
  check_color(l, "jones_borromean");
  check_color(n, "jones_borromean");
  const int lo = std::min({k, l, n});
  const int hi = std::max({k, l, n});
  const int r = tab.context().r();
  if (hi >= r) throw std::out_of_range("jones_borromean: colors must be below r");
  const LogMagnitude inv_b1 = LogMagnitude::one() / tab.window(1, 1);

  std::vector<LogMagnitude> terms;
  for (int j = 0; j <= lo - 1; ++j) {
    if (2 * j + 1 >= r) break;  // {2j+1}! meets {r} = 0; the term is zero
    LogMagnitude t = inv_b1;
    for (int x : {k, l, n}) t *= tab.window(x - j, x + j);
    const LogMagnitude ratio = tab.window(1, j) / tab.window(1, 2 * j + 1);
    t *= ratio * ratio;
    if (j % 2 != 0) t = -t;
    terms.push_back(t);
  }
  return terms;
}

std::vector<LogMagnitude> borromean_terms(const RootContext& ctx, int k, int l, int n) {
  return borromean_terms(BraceTable(ctx), k, l, n);
}

LogMagnitude jones_borromean(const BraceTable& tab, int k, int l, int n) {
  LogSum acc;
  for (const auto& t : borromean_terms(tab, k, l, n)) acc.add(t);
  return acc.value();
}

LogMagnitude jones_borromean(const RootContext& ctx, int k, int l, int n) {
  return jones_borromean(BraceTable(ctx), k, l, n);
}

std::complex<double> jones_torus(const RootContext& ctx, int p, int q, int i) {
  check_color(i, "jones_torus");
  if (p == 0 || q == 0 || std::gcd(p, q) != 1) throw std::invalid_argument("jones_torus: need gcd(p,q) = 1");
  // With K = 2k, Morton's fraction (A^a - A^b)/(A^2 - A^-2) equals
  // A^{pqK^2 - 2pK} [1 - qK]; K runs over -(i-1), -(i-3), ..., i-1.
  const std::int64_t pq = static_cast<std::int64_t>(p) * q;
  std::complex<double> acc = 0.0;
  for (std::int64_t K = -(i - 1); K <= i - 1; K += 2) {
    const double n = ctx.qint(1 - q * K);
    if (n == 0.0) continue;
    acc += ctx.a_power(pq * K * K - 2 * p * K) * n;
  }
  const std::int64_t ii = i;
  return ctx.a_power(pq * (1 - ii * ii)) * acc;
}

JonesEvaluator::JonesEvaluator(const RootContext& ctx, LinkExpr link) : ctx_(ctx), link_(std::move(link)) {}

const BraceTable& JonesEvaluator::braces() {
  if (!braces_) braces_ = std::make_unique<BraceTable>(ctx_);
  return *braces_;
}

ScaledComplex JonesEvaluator::eval(const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != components(link_))
    throw std::invalid_argument("jones: " + std::to_string(colors.size()) + " color(s) given for a link with " +
                                std::to_string(components(link_)) + " component(s)");
  for (int c : colors) check_color(c, "jones");
  return eval_node(link_, colors);
}

// Knot value at any integer color: J_0 = 0 and J_{-n} = -J_n.
ScaledComplex JonesEvaluator::eval_knot_extended(const LinkExpr& e, int color) {
  if (color == 0) return ScaledComplex::zero();
  if (color < 0) return -eval_node(e, {-color});
  return eval_node(e, {color});
}

ScaledComplex JonesEvaluator::eval_node(const LinkExpr& e, const std::vector<int>& colors) {
  const auto key = std::make_pair(&e, colors);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  using K = LinkExpr::Kind;
  ScaledComplex v;
  switch (e.kind) {
    case K::unknot:
      v = ScaledComplex::from(std::complex<double>(ctx_.qint(colors[0]), 0.0));
      break;
    case K::fig8:
      v = ScaledComplex::from(jones_fig8(ctx_, colors[0]));
      break;
    case K::borromean:
      v = ScaledComplex::from(jones_borromean(braces(), colors[0], colors[1], colors[2]));
      break;
    case K::torus:
      v = ScaledComplex::from(jones_torus(ctx_, e.p, e.q, colors[0]));
      break;
    case K::split: {
      const int na = components(*e.a);
      const std::vector<int> ca(colors.begin(), colors.begin() + na);
      const std::vector<int> cb(colors.begin() + na, colors.end());
      v = eval_node(*e.a, ca) * eval_node(*e.b, cb);
      break;
    }
    case K::connsum: {
      // Colors: all of a, then b without its joined component.
      const int na = components(*e.a);
      const std::vector<int> ca(colors.begin(), colors.begin() + na);
      const int shared = ca[static_cast<std::size_t>(e.comp_a)];
      std::vector<int> cb(colors.begin() + na, colors.end());
      cb.insert(cb.begin() + e.comp_b, shared);
      const double unknot = ctx_.qint(shared);
      if (unknot == 0.0)
        throw std::domain_error("connsum: [" + std::to_string(shared) + "] vanishes at this root");
      v = eval_node(*e.a, ca) * eval_node(*e.b, cb) / ScaledComplex::from(std::complex<double>(unknot, 0.0));
      break;
    }
    case K::cable: {
      // t^{pq(i^2-1)/4} sum_k t^{-pk(qk+1)} J_{K,2qk+1} with t = A^4 and K = 2k.
      const std::int64_t p = e.p, q = e.q, i = colors[0];
      ScaledComplex acc;
      for (std::int64_t K = -(i - 1); K <= i - 1; K += 2) {
        const std::int64_t c = q * K + 1;
        if (c == 0) continue;
        ScaledComplex term = eval_knot_extended(*e.a, static_cast<int>(c));
        term *= ctx_.a_power(-(p * q * K * K + 2 * p * K));
        acc += term;
      }
      acc *= ctx_.a_power(p * q * (i * i - 1));
      v = acc;
      break;
    }
  }
  memo_.emplace(key, v);
  return v;
}

std::complex<double> jones_eval(const RootContext& ctx, const LinkExpr& link, const std::vector<int>& colors) {
  JonesEvaluator ev(ctx, link);
  return ev.eval(colors).value();
}

}  // namespace skein
