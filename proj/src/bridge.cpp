#include "skein/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "json.hpp"

namespace skein {

namespace {

LogMagnitude square(const ScaledComplex& z) {
  if (z.is_zero()) return LogMagnitude::zero();
  return {1, 2.0 * z.log_abs()};
}

// Sum over colors whose first entry is `first`.  The evaluator is shared by
// all slices of one worker so companion knots of cables are computed once.
LogMagnitude slice_sum(JonesEvaluator& ev, const BraceTable& tab, int max_color, int first) {
  LogSum acc;
  const LinkExpr& link = ev.link();
  if (link.kind == LinkExpr::Kind::borromean) {
    const int k = first;
    for (int l = k; l <= max_color; ++l) {
      for (int n = l; n <= max_color; ++n) {
        const int orbit = (k == l && l == n) ? 1 : (k == l || l == n) ? 3 : 6;
        const LogMagnitude j = jones_borromean(tab, k, l, n);
        if (j.is_zero()) continue;
        acc.add(LogMagnitude{1, 2.0 * j.log_abs + std::log(static_cast<double>(orbit))});
      }
    }
    return acc.value();
  }
  const int n = components(link);
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  colors[0] = first;
  for (;;) {
    acc.add(square(ev.eval(colors)));
    int pos = n - 1;
    while (pos >= 1 && colors[pos] == max_color) colors[pos--] = 1;
    if (pos < 1) break;
    ++colors[pos];
  }
  return acc.value();
}

}  // namespace

LogMagnitude jones_square_sum(const RootContext& ctx, const LinkExpr& link, int max_color, int threads) {
  if (max_color < 1) return LogMagnitude::zero();
  std::vector<LogMagnitude> parts(static_cast<std::size_t>(max_color));
  const int workers = std::clamp(resolve_threads(threads), 1, max_color);
  const BraceTable tab(ctx);
  auto work = [&](int w) {
    JonesEvaluator ev(ctx, link);
    for (int f = 1 + w; f <= max_color; f += workers) parts[f - 1] = slice_sum(ev, tab, max_color, f);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  LogSum total;
  for (const auto& p : parts) total.add(p);
  return total.value();
}

int jones_color_bound(const RootContext& ctx) { return ctx.flavor() == Flavor::su2 ? ctx.r() - 1 : ctx.m(); }

double lower_bound_H(const RootContext& ctx, const LinkExpr& link) {
  if (ctx.flavor() == Flavor::su2) return std::pow(eta(ctx), 2);
  return std::ldexp(std::pow(eta_prime(ctx), 2), components(link) - 1);
}

LogMagnitude tv_from_jones_log(const RootContext& ctx, const LinkExpr& link, int threads) {
  LogMagnitude s = jones_square_sum(ctx, link, jones_color_bound(ctx), threads);
  return s * LogMagnitude::from_double(lower_bound_H(ctx, link));
}

double tv_from_jones_su2(const RootContext& ctx, const LinkExpr& link, int threads) {
  if (ctx.flavor() != Flavor::su2) throw FlavorError("tv_from_jones_su2: requires an su2 root");
  return tv_from_jones_log(ctx, link, threads).to_double();
}

double tv_from_jones_so3(const RootContext& ctx, const LinkExpr& link, int threads) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("tv_from_jones_so3: requires an so3 root");
  return tv_from_jones_log(ctx, link, threads).to_double();
}

double tv_prime_from_jones(const RootContext& ctx, const LinkExpr& link, int threads) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("tv_prime_from_jones: requires an so3 root");
  return (jones_square_sum(ctx, link, ctx.m(), threads) * LogMagnitude::from_double(std::pow(eta_prime(ctx), 2)))
      .to_double();
}

std::string IdentityReport::to_json() const {
  nlohmann::json j;
  j["r"] = r;
  j["flavor"] = to_string(flavor);
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["abs_diff"] = abs_diff;
  j["rel_diff"] = rel_diff;
  j["pass"] = pass;
  j["lower_bound"] = lower_bound;
  return j.dump();
}

std::vector<IdentityReport> verify_identity(const LinkExpr& link, const Triangulation& tri,
                                            const std::vector<int>& r_list, Flavor flavor, int threads) {
  std::vector<IdentityReport> out;
  for (int r : r_list) {
    const RootContext ctx(r, flavor);
    IdentityReport rep;
    rep.r = r;
    rep.flavor = flavor;
    rep.lhs = tv(tri, ctx, {Normalization::spin_network, threads}).value;
    rep.rhs = tv_from_jones_log(ctx, link, threads).to_double();
    rep.abs_diff = std::abs(rep.lhs - rep.rhs);
    const double scale = std::max(std::abs(rep.rhs), std::abs(rep.lhs));
    rep.rel_diff = scale == 0.0 ? 0.0 : rep.abs_diff / scale;
    rep.pass = rep.rel_diff < kIdentityTolerance;
    rep.lower_bound = lower_bound_H(ctx, link);
    out.push_back(rep);
  }
  return out;
}

std::string reports_to_json(const std::vector<IdentityReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(nlohmann::json::parse(r.to_json()));
  return arr.dump(2);
}

}  // namespace skein
