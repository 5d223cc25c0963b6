#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/bridge.hpp"

namespace skein {

/// Lobachevsky function -int_0^theta log|2 sin u| du.  Odd and pi-periodic.
double lobachevsky(double theta);

/// Reference volumes built from the Lobachevsky function.
struct VolumeConstants {
  double lambda_pi6;     // maximum of the Lobachevsky function
  double v3;             // regular ideal tetrahedron, 2 Lambda(pi/6)
  double v8;             // regular ideal octahedron, 8 Lambda(pi/4)
  double vol_fig8;       // 4 Lambda(pi/6)
  double vol_borromean;  // 2 v8

  static const VolumeConstants& get();
};

/// Lambda(a+t) - Lambda(a-t) + (2/3)Lambda(t) - (2/3)Lambda(2t).
double f_alpha_theta(double alpha, double theta);

struct GridMinimum {
  double value = 0.0;
  double alpha = 0.0;
  double theta = 0.0;
};

/// Minimum of f_alpha_theta over the n x n grid (k pi/n, l pi/n), 0 <= k,l < n.
/// f is pi-periodic in both arguments, so this covers [0,pi]^2.
GridMinimum minimize_f_on_grid(int n);

struct GrowthRow {
  int r = 0;
  LogMagnitude tv;
  double y = 0.0;  // (2 pi / r) log tv
};

/// y_r ~ a + b log(r)/r + c/r.
struct GrowthFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double residual = 0.0;  // rms over the rows used
  int rows_used = 0;

  std::string to_json() const;
};

struct GrowthSeries {
  std::vector<GrowthRow> rows;
  std::optional<GrowthFit> fit;

  /// Header `r,log_tv,y_r`, one line per row.
  std::string to_csv() const;
  std::string to_json() const;
};

/// Least squares over the largest half of the rows (at least three of them).
/// Empty when there are fewer than four rows.
std::optional<GrowthFit> fit_growth(const std::vector<GrowthRow>& rows);

/// TV_r at the principal so3 root through the Jones sum, for each odd r
/// (ascending).  Rows are computed in parallel; the output does not depend on
/// the thread count.
GrowthSeries growth_series(const LinkExpr& link, const std::vector<int>& r_list, int threads = 1);
/// Same through the state sum on a triangulation; only small r are practical.
GrowthSeries growth_series(const Triangulation& tri, const std::vector<int>& r_list, int threads = 1);

/// Odd r from r_min to r_max inclusive.
std::vector<int> odd_range(int r_min, int r_max, int step = 2);

/// log|{j}!| + (r/2pi) Lambda(2 j pi / r) at an so3 context, 0 < j < r.
double qfact_log_residual(const RootContext& ctx, int j);

struct ResidualScan {
  double constant = 0.0;  // max |residual| / log r
  int r = 0;              // where the maximum is attained
  int j = 0;
};

/// Largest |qfact_log_residual| / log r over all 0 < j < r and r in r_list.
ResidualScan scan_qfact_residual(const std::vector<int>& r_list);

/// log max_{1 <= i <= r-1} |J_{4_1,i}| at the principal su2 root
/// (t = exp(2 pi i / r)).  The Habiro sum alternates there, so it is
/// evaluated in 120-digit arithmetic.
double fig8_log_max_su2(int r);

}  // namespace skein
