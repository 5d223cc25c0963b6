// Command-line front end.  Exit codes: 0 success, 1 computation error
// (including a failed identity check), 2 usage error.

#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein/asymptotics.hpp"

namespace {

using namespace skein;
using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt(std::complex<double> z) {
  const double tol = 1e-12 * std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) <= tol) return fmt(z.real());
  return fmt(z.real()) + (z.imag() < 0 ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

// so3 needs odd r; anything below 3 is meaningless for either flavor.
RootContext make_root(int r, bool so3, int root = 1) {
  if (r < 3) throw UsageError("--r must be at least 3");
  if (so3 && r % 2 == 0) throw UsageError("--so3 needs an odd r, got " + std::to_string(r));
  try {
    return RootContext(r, so3 ? Flavor::so3 : Flavor::su2, root);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

LinkExpr parse_link_arg(const std::string& s) {
  try {
    return parse_link(s);
  } catch (const LinkParseError& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_int_list(const std::string& s, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " entry '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + " is empty");
  return out;
}

Normalization parse_form(const std::string& s) {
  if (s == "def27") return Normalization::spin_network;
  if (s == "appendix") return Normalization::quantum_6j;
  throw UsageError("--form must be def27 or appendix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turaev-Viro state sums, colored Jones sums and their asymptotics"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  std::string format = "plain";
  app.add_option("--threads", threads, "Worker threads (0: SKEIN_THREADS or hardware)")->check(CLI::NonNegativeNumber);
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "csv"}));

  std::function<void()> action;
  std::ostream& out = std::cout;

  // qint
  int r = 0, root = 1;
  bool so3 = false, su2 = false;
  long long qn = 0;
  auto* qint = app.add_subcommand("qint", "Quantum integer [n]");
  qint->add_option("n", qn)->required();
  qint->add_option("--r", r)->required();
  qint->add_flag("--so3", so3, "A is a primitive 2r-th root (default 4r-th)");
  qint->add_option("--root", root, "Root exponent k");
  qint->callback([&] {
    action = [&] {
      const auto ctx = make_root(r, so3, root);
      const double v = ctx.qint(qn);
      if (format == "json")
        out << json{{"r", r}, {"flavor", to_string(ctx.flavor())}, {"n", qn}, {"value", v}}.dump() << '\n';
      else
        out << fmt(v) << '\n';
    };
  });

  // sixj
  std::vector<int> six;
  std::string form = "def27";
  auto* sixj_cmd = app.add_subcommand("sixj", "6j symbol of an admissible six-tuple");
  sixj_cmd->add_option("colors", six, "i j k l m n")->required()->expected(6);
  sixj_cmd->add_option("--r", r)->required();
  sixj_cmd->add_flag("--so3", so3);
  sixj_cmd->add_option("--root", root);
  sixj_cmd->add_option("--form", form, "def27 or appendix");
  sixj_cmd->callback([&] {
    action = [&] {
      const auto ctx = make_root(r, so3, root);
      const ColorSixTuple s{six[0], six[1], six[2], six[3], six[4], six[5]};
      for (int c : six)
        if (c < 0 || c > r - 2) throw UsageError("colors must lie in 0..r-2");
      if (!is_admissible(ctx, s)) throw UsageError("six-tuple is not admissible at this level");
      const double v = sixj(ctx, s, parse_form(form));
      if (format == "json")
        out << json{{"r", r}, {"flavor", to_string(ctx.flavor())}, {"colors", six}, {"form", form}, {"value", v}}.dump()
            << '\n';
      else
        out << fmt(v) << '\n';
    };
  });

  // tv-statesum
  std::string file;
  bool prime = false, timing = false;
  auto* tvs = app.add_subcommand("tv-statesum", "Turaev-Viro state sum on a triangulation");
  tvs->add_option("file", file)->required();
  tvs->add_option("--r", r)->required();
  tvs->add_flag("--so3", so3);
  tvs->add_option("--root", root);
  tvs->add_option("--form", form, "def27 or appendix");
  tvs->add_flag("--prime", prime, "Even colors only (TV'); needs --so3");
  tvs->add_flag("--timing", timing, "Report wall time (not byte-stable)");
  tvs->callback([&] {
    action = [&] {
      const auto ctx = make_root(r, so3, root);
      if (prime && !so3) throw UsageError("--prime needs --so3");
      const auto norm = parse_form(form);
      const auto tri = load_triangulation(file);
      const StateSumOptions opts{norm, threads};
      const auto res = prime ? tv_prime(tri, ctx, opts) : tv(tri, ctx, opts);
      if (format == "json") {
        json j{{"r", r},
               {"flavor", to_string(ctx.flavor())},
               {"form", form},
               {"prime", prime},
               {"value", res.value},
               {"admissible", res.admissible},
               {"visited", res.visited}};
        if (timing) j["seconds"] = res.seconds;
        out << j.dump() << '\n';
      } else {
        out << fmt(res.value) << '\n';
        if (timing) std::cerr << res.seconds << " s\n";
      }
    };
  });

  // jones
  std::string expr, colors_arg;
  auto* jones = app.add_subcommand("jones", "Colored Jones polynomial at a root of unity");
  jones->add_option("expr", expr, "Link expression")->required();
  jones->add_option("--colors", colors_arg, "Comma-separated colors, one per component")->required();
  jones->add_option("--r", r)->required();
  jones->add_flag("--so3", so3);
  jones->add_option("--root", root);
  jones->callback([&] {
    action = [&] {
      const auto ctx = make_root(r, so3, root);
      const auto link = parse_link_arg(expr);
      const auto colors = parse_int_list(colors_arg, "--colors");
      ScaledComplex v;
      try {
        JonesEvaluator ev(ctx, link);
        v = ev.eval(colors);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (format == "json")
        out << json{{"r", r},
                    {"flavor", to_string(ctx.flavor())},
                    {"link", to_string(link)},
                    {"colors", colors},
                    {"re", v.value().real()},
                    {"im", v.value().imag()},
                    {"log_abs", v.is_zero() ? nullptr : json(v.log_abs())}}
                   .dump()
            << '\n';
      else
        out << fmt(v.value()) << '\n';
    };
  });

  // tv-sum
  auto* tvsum = app.add_subcommand("tv-sum", "TV of the link complement from the colored Jones sum");
  tvsum->add_option("expr", expr)->required();
  tvsum->add_option("--r", r)->required();
  auto* so3_flag = tvsum->add_flag("--so3", so3, "Sum over 1..(r-1)/2 at a primitive 2r-th root (default)");
  tvsum->add_flag("--su2", su2, "Sum over 1..r-1 at a primitive 4r-th root")->excludes(so3_flag);
  tvsum->callback([&] {
    action = [&] {
      const bool use_so3 = !su2;
      const auto ctx = make_root(r, use_so3);
      const auto link = parse_link_arg(expr);
      const auto v = tv_from_jones_log(ctx, link, threads);
      const double lb = lower_bound_H(ctx, link);
      if (format == "json")
        out << json{{"r", r},
                    {"flavor", to_string(ctx.flavor())},
                    {"link", to_string(link)},
                    {"value", v.to_double()},
                    {"log_value", v.log_abs},
                    {"lower_bound", lb}}
                   .dump()
            << '\n';
      else
        out << fmt(v.to_double()) << '\n';
    };
  });

  // verify
  std::string r_list_arg;
  auto* verify = app.add_subcommand("verify", "Compare the state sum with the Jones sum");
  verify->add_option("expr", expr)->required();
  verify->add_option("file", file)->required();
  verify->add_option("--r-list", r_list_arg, "Comma-separated levels")->required();
  verify->add_flag("--su2", su2, "Use primitive 4r-th roots instead of 2r-th roots");
  verify->callback([&] {
    action = [&] {
      const auto link = parse_link_arg(expr);
      const auto rs = parse_int_list(r_list_arg, "--r-list");
      for (int x : rs) make_root(x, !su2);
      const auto tri = load_triangulation(file);
      const auto reports = verify_identity(link, tri, rs, su2 ? Flavor::su2 : Flavor::so3, threads);
      bool ok = true;
      for (const auto& rep : reports) ok = ok && rep.pass;
      if (format == "json") {
        out << reports_to_json(reports) << '\n';
      } else {
        for (const auto& rep : reports)
          out << "r=" << rep.r << ' ' << to_string(rep.flavor) << " lhs=" << fmt(rep.lhs) << " rhs=" << fmt(rep.rhs)
              << " rel_diff=" << fmt(rep.rel_diff) << ' ' << (rep.pass ? "pass" : "FAIL") << '\n';
      }
      if (!ok) throw std::runtime_error("identity check failed");
    };
  });

  // growth
  int r_min = 5, r_max = 0, step = 2;
  bool fit = false;
  auto* growth = app.add_subcommand("growth", "Growth series (2pi/r) log TV_r over odd r");
  growth->add_option("expr", expr)->required();
  growth->add_option("--r-max", r_max)->required();
  growth->add_option("--r-min", r_min);
  growth->add_option("--step", step, "Even stride between levels");
  growth->add_flag("--fit", fit, "Fit y = a + b log(r)/r + c/r");
  growth->callback([&] {
    action = [&] {
      const auto link = parse_link_arg(expr);
      if (r_min < 3 || r_max < r_min) throw UsageError("need 3 <= --r-min <= --r-max");
      if (step <= 0 || step % 2 != 0) throw UsageError("--step must be positive and even");
      auto series = growth_series(link, odd_range(r_min, r_max, step), threads);
      if (!fit) series.fit.reset();
      if (format == "json") {
        out << series.to_json() << '\n';
        return;
      }
      out << series.to_csv();
      if (fit) out << "# fit " << (series.fit ? series.fit->to_json() : "null") << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (action) action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
