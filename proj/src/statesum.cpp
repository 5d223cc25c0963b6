#include "skein/statesum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "json.hpp"

namespace skein {

namespace {

// Tree reduction whose shape depends only on the length.
long double pairwise_sum_ext(std::vector<long double> v) {
  if (v.empty()) return 0.0L;
  while (v.size() > 1) {
    std::vector<long double> next((v.size() + 1) / 2);
    for (std::size_t k = 0; k < next.size(); ++k) next[k] = v[2 * k] + (2 * k + 1 < v.size() ? v[2 * k + 1] : 0.0L);
    v = std::move(next);
  }
  return v[0];
}

bool triple_ok(int a, int b, int c, int r) {
  return a + b >= c && b + c >= a && c + a >= b && (a + b + c) % 2 == 0 && a + b + c <= 2 * (r - 2);
}

// Search plan: edge order plus, for each depth, the faces and tetrahedra
// whose last edge gets colored there.
struct Plan {
  std::vector<int> order;
  std::vector<std::vector<std::array<int, 3>>> checks;  // triples to test at each depth
  std::vector<int> palette;

  Plan(const Triangulation& tri, const RootContext& ctx, Palette pal) {
    const auto val = edge_valence(tri);
    order.resize(static_cast<std::size_t>(tri.num_edges));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return val[a] > val[b]; });
    std::vector<int> depth_of(order.size());
    for (std::size_t d = 0; d < order.size(); ++d) depth_of[order[d]] = static_cast<int>(d);

    checks.resize(order.size());
    auto schedule = [&](const std::array<int, 3>& f) {
      const int d = std::max({depth_of[f[0]], depth_of[f[1]], depth_of[f[2]]});
      auto& bucket = checks[d];
      if (std::find(bucket.begin(), bucket.end(), f) == bucket.end()) bucket.push_back(f);
    };
    for (const auto& f : tri.faces) schedule(f);
    for (const auto& t : tri.tetrahedra)
      for (const auto& f : tetra_faces(t)) schedule(f);

    const int step = pal == Palette::even ? 2 : 1;
    for (int c = 0; c <= ctx.r() - 2; c += step) palette.push_back(c);
  }
};

struct Searcher {
  const Plan& plan;
  int r;
  const std::function<void(const Coloring&)>& visit;
  Coloring colors;
  EnumerationStats stats;

  void descend(std::size_t depth) {
    if (depth == plan.order.size()) {
      ++stats.admissible;
      visit(colors);
      return;
    }
    const int e = plan.order[depth];
    for (int c : plan.palette) {
      ++stats.visited;
      colors[e] = c;
      bool ok = true;
      for (const auto& f : plan.checks[depth]) {
        if (!triple_ok(colors[f[0]], colors[f[1]], colors[f[2]], r)) {
          ok = false;
          break;
        }
      }
      if (ok) descend(depth + 1);
    }
    colors[e] = 0;
  }
};

// Runs the search with the first edge's color fixed to palette[slot].
EnumerationStats search_subtree(const Plan& plan, const RootContext& ctx, std::size_t slot,
                                const std::function<void(const Coloring&)>& visit) {
  Searcher s{plan, ctx.r(), visit, Coloring(plan.order.size(), 0), {}};
  const int e = plan.order[0];
  s.colors[e] = plan.palette[slot];
  ++s.stats.visited;
  for (const auto& f : plan.checks[0])
    if (!triple_ok(s.colors[f[0]], s.colors[f[1]], s.colors[f[2]], ctx.r())) return s.stats;
  s.descend(1);
  return s.stats;
}

StateSumResult run(const Triangulation& tri, const RootContext& ctx, Palette palette, double vertex_factor,
                   const StateSumOptions& opts) {
  validate(tri);
  const auto start = std::chrono::steady_clock::now();
  const Plan plan(tri, ctx, palette);
  CoefficientCache cache(ctx, opts.form);
  std::vector<long double> edge_weights(static_cast<std::size_t>(ctx.r() - 1));
  for (int i = 0; i <= ctx.r() - 2; ++i) edge_weights[static_cast<std::size_t>(i)] = edge_weight_ext(ctx, i);

  const std::size_t slots = plan.palette.size();
  std::vector<long double> partial(slots, 0.0L);
  std::vector<EnumerationStats> stats(slots);

  auto work = [&](std::size_t slot) {
    // Terms cancel by up to ~1e8 relative to the result near r = 30; long
    // double terms with a compensated sum keep about ten digits there.
    long double sum = 0.0L, comp = 0.0L;
    auto weigh = [&](const Coloring& c) {
      long double w = 1.0L;
      for (int e = 0; e < tri.num_edges; ++e) w *= edge_weights[static_cast<std::size_t>(c[e])];
      for (const auto& f : tri.faces) w *= cache.face_factor({c[f[0]], c[f[1]], c[f[2]]});
      for (const auto& t : tri.tetrahedra)
        w *= cache.tet_factor({c[t[0]], c[t[1]], c[t[2]], c[t[3]], c[t[4]], c[t[5]]});
      const long double t = sum + w;
      comp += std::abs(sum) >= std::abs(w) ? (sum - t) + w : (w - t) + sum;
      sum = t;
    };
    stats[slot] = search_subtree(plan, ctx, slot, weigh);
    partial[slot] = sum + comp;
  };

  const int threads = std::min<int>(resolve_threads(opts.threads), static_cast<int>(slots));
  if (threads <= 1) {
    for (std::size_t s = 0; s < slots; ++s) work(s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t s; (s = next.fetch_add(1)) < slots;) work(s);
      });
    for (auto& th : pool) th.join();
  }

  StateSumResult res;
  // Partial sums depend only on the subtree, so the reduction is independent of
  // the worker count.
  res.value = static_cast<double>(std::pow(static_cast<long double>(vertex_factor), 2 * tri.num_interior_vertices) *
                                  pairwise_sum_ext(partial));
  for (const auto& s : stats) {
    res.visited += s.visited;
    res.admissible += s.admissible;
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

EnumerationStats enumerate_admissible(const Triangulation& tri, const RootContext& ctx, Palette palette,
                                      const std::function<void(const Coloring&)>& visit) {
  validate(tri);
  const Plan plan(tri, ctx, palette);
  EnumerationStats total;
  for (std::size_t s = 0; s < plan.palette.size(); ++s) {
    const auto st = search_subtree(plan, ctx, s, visit);
    total.visited += st.visited;
    total.admissible += st.admissible;
  }
  return total;
}

std::string StateSumResult::to_json() const {
  nlohmann::json j;
  j["value"] = value;
  j["admissible"] = admissible;
  j["visited"] = visited;
  j["seconds"] = seconds;
  return j.dump();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SKEIN_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

StateSumResult tv(const Triangulation& tri, const RootContext& ctx, const StateSumOptions& opts) {
  return run(tri, ctx, Palette::full, eta(ctx), opts);
}

StateSumResult tv_prime(const Triangulation& tri, const RootContext& ctx, const StateSumOptions& opts) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("tv_prime: requires an so3 root (odd r)");
  return run(tri, ctx, Palette::even, eta_prime(ctx), opts);
}

}  // namespace skein
