#include "skein/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>
#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "json.hpp"

namespace skein {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kClausenTerms = 40;

// |B_2k| / (2k (2k+1)!), the coefficients of the Clausen series.
const std::array<double, kClausenTerms>& clausen_coefficients() {
  static const auto table = [] {
    std::array<double, kClausenTerms> c{};
    for (int k = 1; k <= kClausenTerms; ++k) {
      const double b = std::abs(boost::math::bernoulli_b2n<double>(k));
      c[k - 1] = b / (2.0 * k * boost::math::factorial<double>(2 * k + 1));
    }
    return c;
  }();
  return table;
}

// Cl_2(x) = x - x log|x| + sum_k c_k x^{2k+1}, |x| <= pi.  The ratio of
// successive terms tends to (x / 2pi)^2 <= 1/4.
double clausen2(double x) {
  if (x == 0.0) return 0.0;
  const auto& c = clausen_coefficients();
  const double x2 = x * x;
  double pw = x * x2;
  double s = 0.0;
  for (int k = 0; k < kClausenTerms; ++k) {
    const double term = c[k] * pw;
    s += term;
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
    pw *= x2;
  }
  return x - x * std::log(std::abs(x)) + s;
}

}  // namespace

double lobachevsky(double theta) {
  // Lambda(theta) = Cl_2(2 theta) / 2; reduce 2 theta into [-pi, pi].
  double x = std::remainder(2.0 * theta, 2.0 * kPi);
  return 0.5 * clausen2(x);
}

const VolumeConstants& VolumeConstants::get() {
  static const VolumeConstants v = [] {
    VolumeConstants c{};
    c.lambda_pi6 = lobachevsky(kPi / 6);
    c.v3 = 2 * c.lambda_pi6;
    c.v8 = 8 * lobachevsky(kPi / 4);
    c.vol_fig8 = 4 * c.lambda_pi6;
    c.vol_borromean = 2 * c.v8;
    return c;
  }();
  return v;
}

double f_alpha_theta(double alpha, double theta) {
  return lobachevsky(alpha + theta) - lobachevsky(alpha - theta) +
         (2.0 / 3.0) * (lobachevsky(theta) - lobachevsky(2 * theta));
}

GridMinimum minimize_f_on_grid(int n) {
  if (n < 1) throw std::invalid_argument("minimize_f_on_grid: n must be positive");
  // Every argument is a multiple of pi/n, so one table of Lambda(k pi/n) serves
  // the whole grid.
  std::vector<double> lam(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) lam[k] = lobachevsky(kPi * k / n);
  auto L = [&](long k) { return lam[static_cast<std::size_t>(((k % n) + n) % n)]; };
  GridMinimum best{std::numeric_limits<double>::infinity(), 0, 0};
  for (int t = 0; t < n; ++t) {
    const double tail = (2.0 / 3.0) * (L(t) - L(2L * t));
    for (int a = 0; a < n; ++a) {
      const double v = L(a + t) - L(a - t) + tail;
      if (v < best.value) best = {v, kPi * a / n, kPi * t / n};
    }
  }
  return best;
}

std::string GrowthFit::to_json() const {
  nlohmann::json j;
  j["a"] = a;
  j["b"] = b;
  j["c"] = c;
  j["residual"] = residual;
  j["rows_used"] = rows_used;
  return j.dump();
}

std::string GrowthSeries::to_csv() const {
  std::ostringstream os;
  os << std::setprecision(17);
  os << "r,log_tv,y_r\n";
  for (const auto& row : rows) os << row.r << ',' << row.tv.log_abs << ',' << row.y << '\n';
  return os.str();
}

std::string GrowthSeries::to_json() const {
  nlohmann::json j;
  j["rows"] = nlohmann::json::array();
  for (const auto& row : rows) j["rows"].push_back({{"r", row.r}, {"log_tv", row.tv.log_abs}, {"y_r", row.y}});
  j["fit"] = fit ? nlohmann::json::parse(fit->to_json()) : nlohmann::json(nullptr);
  return j.dump(2);
}

std::optional<GrowthFit> fit_growth(const std::vector<GrowthRow>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 4) return std::nullopt;
  const int used = std::max(3, (n + 1) / 2);
  std::vector<GrowthRow> sorted = rows;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) { return x.r < y.r; });
  Eigen::MatrixXd X(used, 3);
  Eigen::VectorXd y(used);
  for (int k = 0; k < used; ++k) {
    const auto& row = sorted[static_cast<std::size_t>(n - used + k)];
    const double r = row.r;
    X(k, 0) = 1.0;
    X(k, 1) = std::log(r) / r;
    X(k, 2) = 1.0 / r;
    y(k) = row.y;
  }
  const Eigen::Vector3d beta = X.colPivHouseholderQr().solve(y);
  GrowthFit fit;
  fit.a = beta(0);
  fit.b = beta(1);
  fit.c = beta(2);
  fit.residual = std::sqrt((X * beta - y).squaredNorm() / used);
  fit.rows_used = used;
  return fit;
}

namespace {

template <class RowFn>
GrowthSeries build_series(const std::vector<int>& r_list, int threads, RowFn&& tv_at) {
  for (std::size_t k = 0; k < r_list.size(); ++k) {
    if (r_list[k] < 3 || r_list[k] % 2 == 0) throw FlavorError("growth_series: r must be odd and >= 3");
    if (k > 0 && r_list[k] <= r_list[k - 1]) throw std::invalid_argument("growth_series: r list must ascend");
  }
  GrowthSeries out;
  out.rows.resize(r_list.size());
  const int n = static_cast<int>(r_list.size());
  const int workers = std::clamp(resolve_threads(threads), 1, std::max(1, n));
  // Largest r first so the expensive rows are spread over workers.
  auto work = [&](int w) {
    for (int k = n - 1 - w; k >= 0; k -= workers) {
      const int r = r_list[static_cast<std::size_t>(k)];
      GrowthRow row;
      row.r = r;
      row.tv = tv_at(RootContext::so3(r));
      row.y = 2 * kPi / r * row.tv.log_abs;
      out.rows[static_cast<std::size_t>(k)] = row;
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  out.fit = fit_growth(out.rows);
  return out;
}

}  // namespace

GrowthSeries growth_series(const LinkExpr& link, const std::vector<int>& r_list, int threads) {
  return build_series(r_list, threads, [&](const RootContext& ctx) { return tv_from_jones_log(ctx, link, 1); });
}

GrowthSeries growth_series(const Triangulation& tri, const std::vector<int>& r_list, int threads) {
  return build_series(r_list, threads, [&](const RootContext& ctx) {
    return LogMagnitude::from_double(tv(tri, ctx, {Normalization::spin_network, 1}).value);
  });
}

std::vector<int> odd_range(int r_min, int r_max, int step) {
  if (step <= 0 || step % 2 != 0) throw std::invalid_argument("odd_range: step must be positive and even");
  std::vector<int> out;
  for (int r = r_min | 1; r <= r_max; r += step) out.push_back(r);
  return out;
}

double qfact_log_residual(const RootContext& ctx, int j) {
  if (ctx.flavor() != Flavor::so3) throw FlavorError("qfact_log_residual: requires an so3 root");
  if (j <= 0 || j >= ctx.r()) throw std::out_of_range("qfact_log_residual: need 0 < j < r");
  const double r = ctx.r();
  return brace_factorial_log(ctx, j).log_abs + r / (2 * kPi) * lobachevsky(2 * j * kPi / r);
}

ResidualScan scan_qfact_residual(const std::vector<int>& r_list) {
  ResidualScan best;
  for (int r : r_list) {
    const auto ctx = RootContext::so3(r);
    const double lr = std::log(static_cast<double>(r));
    for (int j = 1; j < r; ++j) {
      const double ratio = std::abs(qfact_log_residual(ctx, j)) / lr;
      if (ratio > best.constant) best = {ratio, r, j};
    }
  }
  return best;
}

double fig8_log_max_su2(int r) {
  using big = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<120>>;
  if (r < 3) throw std::invalid_argument("fig8_log_max_su2: r must be >= 3");
  const big pi = boost::math::constants::pi<big>();
  // s[n] = sin(n pi / r); q = A^2 = exp(i pi / r) at the principal su2 root.
  std::vector<big> s(static_cast<std::size_t>(2 * r));
  for (int n = 0; n < 2 * r; ++n) s[n] = sin(pi * n / r);
  big best = 0;
  for (int i = 1; i < r; ++i) {
    // H_i = sum_j prod_{k<=j} (-4 sin((i-k)pi/r) sin((i+k)pi/r)), with i+k < 2r.
    big term = 1, h = 1;
    for (int k = 1; k < i; ++k) {
      term *= -4 * s[i - k] * s[i + k];
      h += term;
    }
    const big v = abs(h * s[i] / s[1]);
    if (v > best) best = v;
  }
  return static_cast<double>(log(best));
}

}  // namespace skein
