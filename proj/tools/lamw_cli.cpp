// lamw: command-line front end over the lamw C API.
//
// Subcommands: w0, omega, nb-check, explore, selftest. Numeric output is
// machine-first: shortest round-trip decimals, one result per line, or a
// single JSON object with --json. Exit codes: 0 success, 1 domain or usage
// error, 2 numerical failure (non-convergence, singular integrand, or a
// failed selftest invariant).

#include <lamw/lamw.h>

#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <system_error>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt(lamw_complex z) { return fmt(z.re) + "," + fmt(z.im); }

int exit_code(lamw_status status) {
  switch (status) {
    case LAMW_OK:
      return 0;
    case LAMW_ERR_DOMAIN:
    case LAMW_ERR_INVALID_ARGUMENT:
      return 1;
    default:
      return 2;
  }
}

int fail(lamw_status status) {
  const char* detail = lamw_last_error();
  std::cerr << "error: " << (detail[0] != '\0' ? detail : lamw_strerror(status))
            << "\n";
  return exit_code(status);
}

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 1;
}

bool parse_double(const char* begin, const char* end, double& out,
                  const char** rest) {
  const auto res = std::from_chars(begin, end, out);
  *rest = res.ptr;
  return res.ec == std::errc{};
}

// Strict RE,IM: two decimal literals joined by a comma, nothing else.
bool parse_complex(const std::string& text, lamw_complex& out) {
  const char* p = text.data();
  const char* end = p + text.size();
  const char* rest = nullptr;
  if (!parse_double(p, end, out.re, &rest) || rest == end || *rest != ',') {
    return false;
  }
  if (!parse_double(rest + 1, end, out.im, &rest)) {
    return false;
  }
  return rest == end;
}

struct TolOpts {
  double rtol;
  double atol;

  lamw_tol tol() const {
    lamw_tol t = lamw_tol_default();
    t.rel_tol = rtol;
    t.abs_tol = atol;
    return t;
  }
};

void add_tol_options(CLI::App* cmd, TolOpts& opts) {
  const lamw_tol defaults = lamw_tol_default();
  opts.rtol = defaults.rel_tol;
  opts.atol = defaults.abs_tol;
  cmd->add_option("--rtol", opts.rtol, "relative tolerance")
      ->envname("LAMW_RTOL");
  cmd->add_option("--atol", opts.atol, "absolute tolerance")
      ->envname("LAMW_ATOL");
}

int run_w0(const std::optional<double>& x_real,
           const std::optional<std::string>& complex_text,
           const std::string& method, const TolOpts& tol_opts, bool as_json) {
  if (x_real.has_value() == complex_text.has_value()) {
    return usage_error("w0 needs exactly one of: positional x, --complex RE,IM");
  }

  lamw_complex x{};
  if (complex_text) {
    if (!parse_complex(*complex_text, x)) {
      return usage_error("--complex expects RE,IM with no spaces");
    }
  } else {
    x = {*x_real, 0.0};
  }

  if (x.im == 0.0 && x.re < lamw_branch_point()) {
    return usage_error("x = " + fmt(x.re) +
                       " lies on the real ray x < -1/e, where W0 has no "
                       "principal value");
  }

  const lamw_tol tol = tol_opts.tol();
  lamw_complex w{};
  lamw_status status;
  if (method == "series") {
    status = lamw_w0_series(x, 0, &w);
  } else if (method == "halley") {
    status = lamw_w0_halley(x, &tol, &w);
  } else {
    status = lamw_w0_integral(x, &tol, &w);
  }
  if (status != LAMW_OK) {
    return fail(status);
  }

  const bool complex_io = complex_text.has_value();
  if (as_json) {
    json j;
    j["method"] = method;
    if (complex_io) {
      j["x"] = {{"re", x.re}, {"im", x.im}};
      j["w"] = {{"re", w.re}, {"im", w.im}};
    } else {
      j["x"] = x.re;
      j["w"] = w.re;
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (complex_io ? fmt(w) : fmt(w.re)) << "\n";
  }
  return 0;
}

int run_omega(const TolOpts& tol_opts, bool as_json) {
  const lamw_tol tol = tol_opts.tol();
  double value = 0.0;
  const lamw_status status = lamw_omega(&tol, &value);
  if (status != LAMW_OK) {
    return fail(status);
  }
  if (as_json) {
    std::cout << json{{"omega", value}}.dump() << "\n";
  } else {
    std::cout << fmt(value) << "\n";
  }
  return 0;
}

int run_nb_check(const std::optional<double>& nu,
                 const std::optional<std::string>& nu_list,
                 const TolOpts& tol_opts, bool as_json) {
  if (nu.has_value() == nu_list.has_value()) {
    return usage_error("nb-check needs exactly one of --nu, --nu-list");
  }

  std::vector<double> nus;
  if (nu) {
    nus.push_back(*nu);
  } else {
    const std::string& text = *nu_list;
    const char* p = text.data();
    const char* end = p + text.size();
    while (p < end) {
      double v = 0.0;
      const char* rest = nullptr;
      if (!parse_double(p, end, v, &rest) ||
          (rest != end && *rest != ',')) {
        return usage_error("--nu-list expects N1,N2,... decimal literals");
      }
      nus.push_back(v);
      p = (rest == end) ? end : rest + 1;
    }
    if (nus.empty()) {
      return usage_error("--nu-list is empty");
    }
  }

  const lamw_tol tol = tol_opts.tol();
  json records = json::array();
  for (double v : nus) {
    lamw_nb_record rec{};
    const lamw_status status = lamw_nb_check(v, &tol, &rec);
    if (status != LAMW_OK) {
      return fail(status);
    }
    if (as_json) {
      records.push_back({{"nu", rec.nu},
                         {"lhs", rec.lhs},
                         {"rhs", rec.rhs},
                         {"rel_error", rec.rel_error}});
    } else {
      std::cout << "nu=" << fmt(rec.nu) << " lhs=" << fmt(rec.lhs)
                << " rhs=" << fmt(rec.rhs) << " rel_error=" << fmt(rec.rel_error)
                << "\n";
    }
  }
  if (as_json) {
    std::cout << json{{"records", records}}.dump() << "\n";
  }
  return 0;
}

int run_explore(const lamw_grid_spec& spec, const std::string& out_path) {
  lamw_sweep* sweep = nullptr;
  lamw_status status = lamw_sweep_run(&spec, &sweep);
  if (status != LAMW_OK) {
    return fail(status);
  }
  const char* csv = nullptr;
  status = lamw_sweep_csv(sweep, &csv);
  if (status != LAMW_OK) {
    lamw_sweep_free(sweep);
    return fail(status);
  }
  if (out_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << csv)) {
      lamw_sweep_free(sweep);
      return usage_error("cannot write " + out_path);
    }
  }
  lamw_sweep_free(sweep);
  return 0;
}

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;
};

SuiteResult selftest_nb_sweep(const lamw_tol& tol) {
  const double nus[] = {0, 0.25, 0.5, 1, 1.5, 2, 3, 3.7, 5, 10, 20};
  double worst = 0.0;
  for (double nu : nus) {
    lamw_nb_record rec{};
    if (lamw_nb_check(nu, &tol, &rec) != LAMW_OK) {
      return {"nb-sweep", false, "nb_check failed at nu=" + fmt(nu)};
    }
    worst = std::max(worst, rec.rel_error);
  }
  return {"nb-sweep", worst <= 1e-10,
          "11 values, max rel_error=" + fmt(worst)};
}

SuiteResult selftest_round_trip(const lamw_tol& tol) {
  const double xs[] = {0.01, 0.1, 0.5, 1, 2, std::numbers::e, 5, 10, 100};
  double worst = 0.0;
  for (double x : xs) {
    double w = 0.0;
    if (lamw_w0_integral_real(x, &tol, &w) != LAMW_OK) {
      return {"round-trip", false, "w0_integral failed at x=" + fmt(x)};
    }
    const double residual = std::abs(w * std::exp(w) - x) / std::max(1.0, std::abs(x));
    worst = std::max(worst, residual);
  }
  return {"round-trip", worst <= 1e-9,
          "9 points, max scaled residual=" + fmt(worst)};
}

SuiteResult selftest_cross_method(const lamw_tol& tol) {
  double worst = 0.0;
  const double series_xs[] = {0.05, -0.05, 0.15, -0.15, 0.3, -0.3};
  for (double x : series_xs) {
    double wi = 0.0;
    double ws = 0.0;
    if (lamw_w0_integral_real(x, &tol, &wi) != LAMW_OK ||
        lamw_w0_series_real(x, 0, &ws) != LAMW_OK) {
      return {"cross-method", false, "evaluation failed at x=" + fmt(x)};
    }
    worst = std::max(worst, std::abs(wi - ws));
  }
  const double halley_xs[] = {0.5, 1, 2, std::numbers::e, 10, 100};
  for (double x : halley_xs) {
    double wi = 0.0;
    double wh = 0.0;
    if (lamw_w0_integral_real(x, &tol, &wi) != LAMW_OK ||
        lamw_w0_halley_real(x, &tol, &wh) != LAMW_OK) {
      return {"cross-method", false, "evaluation failed at x=" + fmt(x)};
    }
    worst = std::max(worst, std::abs(wi - wh));
  }
  return {"cross-method", worst <= 1e-10,
          "12 points, max discrepancy=" + fmt(worst)};
}

int run_selftest(const TolOpts& tol_opts, bool as_json) {
  const lamw_tol tol = tol_opts.tol();
  const SuiteResult suites[] = {
      selftest_nb_sweep(tol),
      selftest_round_trip(tol),
      selftest_cross_method(tol),
  };

  bool all_passed = true;
  json suite_json = json::array();
  for (const SuiteResult& suite : suites) {
    all_passed = all_passed && suite.passed;
    if (as_json) {
      suite_json.push_back({{"name", suite.name},
                            {"passed", suite.passed},
                            {"detail", suite.detail}});
    } else {
      std::cout << suite.name << ": " << (suite.passed ? "ok" : "FAILED")
                << " (" << suite.detail << ")\n";
    }
  }
  if (as_json) {
    std::cout << json{{"passed", all_passed}, {"suites", suite_json}}.dump()
              << "\n";
  }
  return all_passed ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert W0 via its integral representation"};
  app.require_subcommand(1);

  // w0
  auto* w0_cmd = app.add_subcommand("w0", "evaluate W0 at a point");
  std::optional<double> w0_x;
  std::optional<std::string> w0_complex;
  std::string w0_method = "integral";
  TolOpts w0_tol;
  bool w0_json = false;
  w0_cmd->add_option("x", w0_x, "real argument");
  w0_cmd->add_option("--complex", w0_complex, "complex argument RE,IM");
  w0_cmd->add_option("--method", w0_method, "integral | series | halley")
      ->check(CLI::IsMember({"integral", "series", "halley"}));
  add_tol_options(w0_cmd, w0_tol);
  w0_cmd->add_flag("--json", w0_json, "JSON output");

  // omega
  auto* omega_cmd = app.add_subcommand("omega", "the constant W0(1)");
  TolOpts omega_tol;
  bool omega_json = false;
  add_tol_options(omega_cmd, omega_tol);
  omega_cmd->add_flag("--json", omega_json, "JSON output");

  // nb-check
  auto* nb_cmd = app.add_subcommand(
      "nb-check", "check integral of g^nu over [0,pi] against the closed form");
  std::optional<double> nb_nu;
  std::optional<std::string> nb_nu_list;
  TolOpts nb_tol;
  bool nb_json = false;
  nb_cmd->add_option("--nu", nb_nu, "single exponent, nu >= 0");
  nb_cmd->add_option("--nu-list", nb_nu_list, "comma-separated exponents");
  add_tol_options(nb_cmd, nb_tol);
  nb_cmd->add_flag("--json", nb_json, "JSON output");

  // explore
  auto* explore_cmd = app.add_subcommand(
      "explore", "map where the integral reproduces W0 on a complex grid");
  lamw_grid_spec spec{};
  std::string out_path;
  TolOpts explore_tol;
  explore_cmd->add_option("--re-min", spec.re_min)->required();
  explore_cmd->add_option("--re-max", spec.re_max)->required();
  explore_cmd->add_option("--im-min", spec.im_min)->required();
  explore_cmd->add_option("--im-max", spec.im_max)->required();
  explore_cmd->add_option("--nx", spec.nx)->required();
  explore_cmd->add_option("--ny", spec.ny)->required();
  explore_cmd->add_option("--out", out_path, "CSV file (default: stdout)");
  add_tol_options(explore_cmd, explore_tol);

  // selftest
  auto* selftest_cmd =
      app.add_subcommand("selftest", "run the built-in invariant suites");
  TolOpts selftest_tol;
  bool selftest_json = false;
  add_tol_options(selftest_cmd, selftest_tol);
  selftest_cmd->add_flag("--json", selftest_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (*w0_cmd) {
    return run_w0(w0_x, w0_complex, w0_method, w0_tol, w0_json);
  }
  if (*omega_cmd) {
    return run_omega(omega_tol, omega_json);
  }
  if (*nb_cmd) {
    return run_nb_check(nb_nu, nb_nu_list, nb_tol, nb_json);
  }
  if (*explore_cmd) {
    spec.tol = explore_tol.tol();
    return run_explore(spec, out_path);
  }
  if (*selftest_cmd) {
    return run_selftest(selftest_tol, selftest_json);
  }
  return usage_error("no subcommand given");
}
