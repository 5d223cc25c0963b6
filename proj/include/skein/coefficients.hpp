#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "skein/qarith.hpp"

namespace skein {

/// Edge palette for colorings: I_r = {0..r-2} or its even part {0,2,..,r-3}.
enum class Palette { full, even };

/// Which pair of face/tetrahedron weights a state sum uses.
///  - spin_network: trihedral (theta) network values in the denominator and
///    the tetrahedral network value including its factorial prefactor.
///  - quantum_6j: normalized face weights |i,j,k| as multiplicative factors
///    and the bare alternating z-sum as the tetrahedron weight.
/// Both give the same invariant on closed and ideal triangulations.
enum class Normalization { spin_network, quantum_6j };

struct ColorTriple {
  int i = 0, j = 0, k = 0;
};

/// Colors on a tetrahedron in the order (e12, e13, e23, e34, e24, e14).
/// Opposite edge pairs are (i,l), (j,m), (k,n).
struct ColorSixTuple {
  int i = 0, j = 0, k = 0, l = 0, m = 0, n = 0;

  std::array<ColorTriple, 4> faces() const { return {{{i, j, k}, {j, l, n}, {i, m, n}, {k, l, m}}}; }
  std::array<int, 6> as_array() const { return {i, j, k, l, m, n}; }
};

class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Triangle, parity and level clauses.  Entries outside [0, r-2] throw.
/// With Palette::even every entry must also be even.
bool is_admissible(const RootContext& ctx, const ColorTriple& t, Palette palette = Palette::full);
bool is_admissible(const RootContext& ctx, const ColorSixTuple& s, Palette palette = Palette::full);

/// <e_i> = (-1)^i [i+1].
double bracket_cheby(const RootContext& ctx, int i);
/// Edge weight shared by both normalizations; equal to bracket_cheby.
inline double edge_weight(const RootContext& ctx, int i) { return bracket_cheby(ctx, i); }

/// Trihedral network value (-1)^T [T-i]![T-j]![T-k]![T+1]! / ([i]![j]![k]!), T = (i+j+k)/2.
double theta(const RootContext& ctx, const ColorTriple& t);
/// Normalized face weight |i,j,k| = (-1)^T [T-i]![T-j]![T-k]! / [T+1]!.
double theta_appendix(const RootContext& ctx, const ColorTriple& t);

/// Tetrahedron weight in the chosen normalization.
double sixj(const RootContext& ctx, const ColorSixTuple& s, Normalization norm);

/// The same weights in long double.  State sums cancel by up to eight orders
/// of magnitude near r = 30, so their terms are formed at this precision.
long double edge_weight_ext(const RootContext& ctx, int i);
long double theta_ext(const RootContext& ctx, const ColorTriple& t);
long double theta_appendix_ext(const RootContext& ctx, const ColorTriple& t);
long double sixj_ext(const RootContext& ctx, const ColorSixTuple& s, Normalization norm);

/// Single summand P(z) of the bare z-sum; exactly 0 once z + 1 >= r.
double sixj_summand(const RootContext& ctx, const ColorSixTuple& s, int z);

/// Levels above this threshold evaluate the z-sum in LogMagnitude.
inline constexpr int kLinearScaleMaxLevel = 200;

/// Memo for face and tetrahedron weights within one state-sum run.  Sharded
/// maps behind mutexes; inserts are idempotent, so racing writers are harmless.
class CoefficientCache {
 public:
  CoefficientCache(const RootContext& ctx, Normalization norm) : ctx_(ctx), norm_(norm) {}

  /// Face weight as it enters the product: 1/theta for spin_network,
  /// |i,j,k| for quantum_6j.
  long double face_factor(const ColorTriple& t);
  long double tet_factor(const ColorSixTuple& s);

  const RootContext& context() const { return ctx_; }
  Normalization normalization() const { return norm_; }

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    std::mutex mu;
    std::unordered_map<std::uint64_t, long double> map;
  };
  long double lookup(std::array<Shard, kShards>& shards, std::uint64_t key, auto&& compute);

  RootContext ctx_;
  Normalization norm_;
  std::array<Shard, kShards> faces_;
  std::array<Shard, kShards> tets_;
};

}  // namespace skein
