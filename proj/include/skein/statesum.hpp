#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "skein/coefficients.hpp"
#include "skein/triangulation.hpp"

namespace skein {

/// Edge colors indexed by edge class.
using Coloring = std::vector<int>;

struct EnumerationStats {
  std::uint64_t visited = 0;     // search nodes, i.e. partial assignments tried
  std::uint64_t admissible = 0;  // complete admissible colorings
};

/// Calls `visit` once per admissible coloring.  Edges are assigned in order of
/// descending valence and a branch is cut as soon as a fully colored face or
/// tetrahedron is inadmissible.
EnumerationStats enumerate_admissible(const Triangulation& tri, const RootContext& ctx, Palette palette,
                                      const std::function<void(const Coloring&)>& visit);

struct StateSumResult {
  double value = 0.0;
  std::uint64_t admissible = 0;
  std::uint64_t visited = 0;
  double seconds = 0.0;

  /// {"value":..,"admissible":..,"visited":..,"seconds":..}
  std::string to_json() const;
};

struct StateSumOptions {
  Normalization form = Normalization::spin_network;
  /// 0 picks SKEIN_THREADS or the hardware concurrency.
  int threads = 0;
};

/// Worker count: explicit value if positive, else SKEIN_THREADS, else hardware.
int resolve_threads(int requested);

/// TV_r over the full palette at ctx's root.
StateSumResult tv(const Triangulation& tri, const RootContext& ctx, const StateSumOptions& opts = {});
/// TV'_r over even colors; requires an so3 context.
StateSumResult tv_prime(const Triangulation& tri, const RootContext& ctx, const StateSumOptions& opts = {});

}  // namespace skein
