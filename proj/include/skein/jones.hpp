#pragma once

#include <complex>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "skein/link_expr.hpp"
#include "skein/qarith.hpp"

namespace skein {

/// Colors are 1-based: color i is the i-dimensional representation, so the
/// unknot evaluates to [i] and color 1 everywhere gives 1.

/// J_{U,i} = [i]; also defined for i <= 0 ([0] = 0, [-i] = -[i]).
double jones_unknot(const RootContext& ctx, int i);

/// Habiro sum H_i = 1 + sum_{j=1}^{i-1} prod_{k=1}^{j} (t^{(i-k)/2} - t^{-(i-k)/2})(t^{(i+k)/2} - t^{-(i+k)/2}).
/// This is the colored Jones polynomial divided by the unknot value.
LogMagnitude habiro_fig8(const RootContext& ctx, int i);
/// J_{4_1,i} = [i] * H_i, normalized like the unknot.  Real at every root.
LogMagnitude jones_fig8(const RootContext& ctx, int i);

/// log|{u}|, signs and zero counts with prefix sums over 1 <= u < 2r, where
/// {u} = 2 sin(u theta).  Gives any product {lo}...{hi} in O(1).
class BraceTable {
 public:
  explicit BraceTable(const RootContext& ctx);
  const RootContext& context() const { return ctx_; }
  /// {lo}{lo+1}...{hi} for 1 <= lo and hi < 2r; empty product is 1.
  LogMagnitude window(int lo, int hi) const;

 private:
  RootContext ctx_;
  std::vector<double> log_prefix_;
  std::vector<int> neg_prefix_;
  std::vector<int> zero_prefix_;
};

/// Signed Habiro terms for the Borromean rings at colors (k,l,n), in the braces
/// form (-1)^j /{1} * prod_x {x+j}!/{x-j-1}! * ({j}!/{2j+1}!)^2 with
/// {u} = 2 sin(u theta).  Terms with 2j+1 >= r vanish and are omitted.
std::vector<LogMagnitude> borromean_terms(const BraceTable& tab, int k, int l, int n);
std::vector<LogMagnitude> borromean_terms(const RootContext& ctx, int k, int l, int n);
/// Sum of borromean_terms; normalized so that (1,1,1) gives 1 and
/// (k,l,n) with one color 1 gives the unlink value [other][other].
LogMagnitude jones_borromean(const BraceTable& tab, int k, int l, int n);
LogMagnitude jones_borromean(const RootContext& ctx, int k, int l, int n);

/// Torus knot T(p,q) at color i from Morton's formula, with each fraction
/// expanded into a single quantum integer so no 0/0 arises at roots of unity.
std::complex<double> jones_torus(const RootContext& ctx, int p, int q, int i);

/// Colored Jones values of one link at one root.  Caches every sub-evaluation,
/// so scanning all colors of a cable costs a single pass over the companion.
/// Not safe for concurrent use; make one evaluator per worker.
class JonesEvaluator {
 public:
  JonesEvaluator(const RootContext& ctx, LinkExpr link);

  /// Throws std::invalid_argument on a color/component mismatch or a
  /// non-positive color.
  ScaledComplex eval(const std::vector<int>& colors);
  const RootContext& context() const { return ctx_; }
  const LinkExpr& link() const { return link_; }

 private:
  ScaledComplex eval_node(const LinkExpr& e, const std::vector<int>& colors);
  ScaledComplex eval_knot_extended(const LinkExpr& e, int color);
  const BraceTable& braces();

  RootContext ctx_;
  LinkExpr link_;
  std::unique_ptr<BraceTable> braces_;
  std::map<std::pair<const LinkExpr*, std::vector<int>>, ScaledComplex> memo_;
};

/// Convenience wrapper around a fresh JonesEvaluator.
std::complex<double> jones_eval(const RootContext& ctx, const LinkExpr& link, const std::vector<int>& colors);

}  // namespace skein
