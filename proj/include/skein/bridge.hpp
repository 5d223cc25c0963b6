#pragma once

#include <string>
#include <vector>

#include "skein/jones.hpp"
#include "skein/statesum.hpp"

namespace skein {

/// Sum of |J_{L,i}|^2 over all multi-colors with 1 <= i_k <= max_color.
/// Borromean scans visit k <= l <= n only and weight by orbit size.
/// Work is split over the first color; the reduction order is fixed.
LogMagnitude jones_square_sum(const RootContext& ctx, const LinkExpr& link, int max_color, int threads = 1);

/// Largest color in the Jones sum: r-1 at su2 roots, (r-1)/2 at so3 roots.
int jones_color_bound(const RootContext& ctx);

/// eta_r^2 for su2, 2^{n-1} eta'_r^2 for so3; the all-ones term of the sum.
double lower_bound_H(const RootContext& ctx, const LinkExpr& link);

/// TV_r of the link complement from the Jones side, in log form.
LogMagnitude tv_from_jones_log(const RootContext& ctx, const LinkExpr& link, int threads = 1);
/// eta_r^2 * sum_{1<=i<=r-1} |J|^2; su2 root required.
double tv_from_jones_su2(const RootContext& ctx, const LinkExpr& link, int threads = 1);
/// 2^{n-1} eta'_r^2 * sum_{1<=i<=m} |J|^2; so3 root required.
double tv_from_jones_so3(const RootContext& ctx, const LinkExpr& link, int threads = 1);
/// TV'_r = TV_r / 2^{n-1}, i.e. eta'_r^2 times the sum; so3 root required.
double tv_prime_from_jones(const RootContext& ctx, const LinkExpr& link, int threads = 1);

struct IdentityReport {
  int r = 0;
  Flavor flavor = Flavor::so3;
  double lhs = 0.0;  // state sum on the triangulation
  double rhs = 0.0;  // Jones sum
  double abs_diff = 0.0;
  double rel_diff = 0.0;
  bool pass = false;
  double lower_bound = 0.0;

  std::string to_json() const;
};

inline constexpr double kIdentityTolerance = 1e-6;

/// Compares tv(tri) with the Jones sum at each r.  so3 requires odd r.
std::vector<IdentityReport> verify_identity(const LinkExpr& link, const Triangulation& tri,
                                            const std::vector<int>& r_list, Flavor flavor = Flavor::so3,
                                            int threads = 1);

/// JSON array of reports.
std::string reports_to_json(const std::vector<IdentityReport>& reports);

}  // namespace skein
