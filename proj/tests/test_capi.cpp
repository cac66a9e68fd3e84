#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>
#include <string>

#include <lamw/lamw.h>

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_CASE("defaults") {
  const lamw_tol tol = lamw_tol_default();
  CHECK(tol.abs_tol == 1e-13);
  CHECK(tol.rel_tol == 1e-12);
  CHECK(tol.max_subdivisions == 2000);
  CHECK(tol.max_iterations == 100);
  CHECK(lamw_branch_point() == -1.0 / std::numbers::e);
  CHECK(lamw_version() != nullptr);
  CHECK(std::strlen(lamw_version()) > 0);
}

TEST_CASE("kernel round trips through the boundary") {
  lamw_kernel_point p{};
  REQUIRE(lamw_kernel(1.0, &p) == LAMW_OK);
  CHECK(p.t == 1.0);
  CHECK(std::abs(p.g - 1.59917659661677756) <= 1e-13 * p.g);

  REQUIRE(lamw_kernel(0.0, &p) == LAMW_OK);
  CHECK(p.g == std::numbers::e);

  double gp = 0.0;
  REQUIRE(lamw_kernel_power(1.0, 2.0, &gp) == LAMW_OK);
  REQUIRE(lamw_kernel(1.0, &p) == LAMW_OK);
  CHECK(std::abs(gp - p.g * p.g) <= 1e-12 * gp);
}

TEST_CASE("error codes and last-error text") {
  lamw_kernel_point p{};
  CHECK(lamw_kernel(5.0, &p) == LAMW_ERR_DOMAIN);
  CHECK(std::strlen(lamw_last_error()) > 0);

  double out = 0.0;
  CHECK(lamw_log_gamma(-1.0, &out) == LAMW_ERR_DOMAIN);
  CHECK(std::strlen(lamw_last_error()) > 0);

  // success clears the sticky diagnostic
  CHECK(lamw_log_gamma(2.0, &out) == LAMW_OK);
  CHECK(out == 0.0);
  CHECK(std::strlen(lamw_last_error()) == 0);

  CHECK(lamw_kernel(1.0, nullptr) == LAMW_ERR_INVALID_ARGUMENT);
  CHECK(lamw_log_gamma(1.0, nullptr) == LAMW_ERR_INVALID_ARGUMENT);
  CHECK(lamw_w0_integral_real(1.0, nullptr, nullptr) ==
        LAMW_ERR_INVALID_ARGUMENT);
  CHECK(lamw_nb_rhs(1.0, nullptr) == LAMW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("w0 evaluators") {
  double w = 0.0;
  REQUIRE(lamw_w0_integral_real(1.0, nullptr, &w) == LAMW_OK);
  CHECK(std::abs(w - 0.5671432904097838) <= 1e-11);

  double om = 0.0;
  REQUIRE(lamw_omega(nullptr, &om) == LAMW_OK);
  CHECK(om == w);

  lamw_complex wc{};
  CHECK(lamw_w0_integral({-1.0, 0.0}, nullptr, &wc) ==
        LAMW_ERR_SINGULAR_INTEGRAND);
  CHECK(lamw_w0_integral_real(-5.0, nullptr, &w) ==
        LAMW_ERR_SINGULAR_INTEGRAND);
  CHECK(lamw_w0_halley_real(-0.4, nullptr, &w) == LAMW_ERR_DOMAIN);
  CHECK(lamw_w0_series_real(0.5, 0, &w) == LAMW_ERR_DOMAIN);

  REQUIRE(lamw_w0_series({0.1, 0.2}, 0, &wc) == LAMW_OK);
  CHECK(std::abs(wc.re - 0.11645645979484411) <= 1e-12);
  CHECK(std::abs(wc.im - 0.16139709059135797) <= 1e-12);
  lamw_complex wc_neg{};
  REQUIRE(lamw_w0_series({0.1, 0.2}, -3, &wc_neg) == LAMW_OK);
  CHECK(wc_neg.re == wc.re);
  CHECK(wc_neg.im == wc.im);

  REQUIRE(lamw_w0_halley({1.0, 1.0}, nullptr, &wc) == LAMW_OK);
  CHECK(std::abs(wc.re - 0.65696606923043641) <= 1e-12);
  CHECK(std::abs(wc.im - 0.32545033941341503) <= 1e-12);

  // starved budget surfaces as a status, not a crash
  lamw_tol starved = lamw_tol_default();
  starved.abs_tol = 0.0;
  starved.rel_tol = 1e-30;
  starved.max_subdivisions = 1;
  CHECK(lamw_w0_integral_real(0.7, &starved, &w) == LAMW_ERR_NO_CONVERGENCE);
  lamw_tol bad = lamw_tol_default();
  bad.abs_tol = 0.0;
  bad.rel_tol = 0.0;
  CHECK(lamw_w0_integral_real(0.7, &bad, &w) == LAMW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identity checks") {
  double rhs = 0.0;
  REQUIRE(lamw_nb_rhs(1.0, &rhs) == LAMW_OK);
  CHECK(rhs == kPi);

  lamw_nb_record rec{};
  REQUIRE(lamw_nb_check(1.0, nullptr, &rec) == LAMW_OK);
  CHECK(rec.nu == 1.0);
  CHECK(rec.rel_error <= 1e-11);

  lamw_tol starved = lamw_tol_default();
  starved.abs_tol = 0.0;
  starved.rel_tol = 1e-30;
  starved.max_subdivisions = 1;
  CHECK(lamw_nb_check(10.0, &starved, &rec) == LAMW_ERR_NO_CONVERGENCE);

  double dev = 0.0;
  REQUIRE(lamw_series_integral_consistency(0.2, 10, nullptr, &dev) == LAMW_OK);
  CHECK(dev <= 1e-12);
  CHECK(lamw_series_integral_consistency(0.5, 10, nullptr, &dev) ==
        LAMW_ERR_DOMAIN);
}

TEST_CASE("classify point") {
  lamw_grid_cell cell{};
  REQUIRE(lamw_classify_point({1.0, 0.0}, 0.0, 0.0, nullptr, &cell) ==
          LAMW_OK);
  CHECK(cell.status == LAMW_CELL_VALID);
  CHECK(cell.has_w_int == 1);
  CHECK(cell.has_w_ref == 1);
  CHECK(cell.has_abs_err == 1);
  CHECK(std::abs(cell.w_int.re - 0.5671432904097838) <= 1e-10);
  CHECK(cell.w_int.im == 0.0);

  REQUIRE(lamw_classify_point({-1.0, 0.0}, 0.0, 0.0, nullptr, &cell) ==
          LAMW_OK);
  CHECK(cell.status == LAMW_CELL_INTEGRAL_SINGULAR);
  CHECK(cell.has_w_int == 0);
  CHECK(cell.has_abs_err == 0);
}

TEST_CASE("sweep lifecycle") {
  lamw_grid_spec spec{};
  spec.re_min = 0.1;
  spec.re_max = 2.0;
  spec.im_min = -0.5;
  spec.im_max = 0.5;
  spec.nx = 3;
  spec.ny = 3;
  // tol left zeroed: library defaults apply

  lamw_sweep* sweep = nullptr;
  REQUIRE(lamw_sweep_run(&spec, &sweep) == LAMW_OK);
  REQUIRE(sweep != nullptr);
  CHECK(lamw_sweep_cell_count(sweep) == 9);

  lamw_grid_cell cell{};
  REQUIRE(lamw_sweep_cell(sweep, 0, &cell) == LAMW_OK);
  CHECK(cell.x.re == 0.1);
  CHECK(cell.x.im == -0.5);
  REQUIRE(lamw_sweep_cell(sweep, 8, &cell) == LAMW_OK);
  CHECK(cell.x.re == 2.0);
  CHECK(cell.x.im == 0.5);
  for (size_t i = 0; i < 9; ++i) {
    REQUIRE(lamw_sweep_cell(sweep, i, &cell) == LAMW_OK);
    CHECK(cell.status == LAMW_CELL_VALID);
  }
  CHECK(lamw_sweep_cell(sweep, 9, &cell) == LAMW_ERR_INVALID_ARGUMENT);

  const char* csv = nullptr;
  REQUIRE(lamw_sweep_csv(sweep, &csv) == LAMW_OK);
  REQUIRE(csv != nullptr);
  const std::string first(csv);
  CHECK(first.rfind("re,im,w_int_re,w_int_im,w_ref_re,w_ref_im,abs_err,status\n",
                    0) == 0);
  const char* again = nullptr;
  REQUIRE(lamw_sweep_csv(sweep, &again) == LAMW_OK);
  CHECK(again == csv);  // cached, stable address

  lamw_sweep_free(sweep);
  lamw_sweep_free(nullptr);  // tolerated

  CHECK(lamw_sweep_run(nullptr, &sweep) == LAMW_ERR_INVALID_ARGUMENT);
  lamw_grid_spec bad = spec;
  bad.nx = 1;
  CHECK(lamw_sweep_run(&bad, &sweep) == LAMW_ERR_INVALID_ARGUMENT);
}

TEST_CASE("metadata strings") {
  for (int s = 0; s <= 5; ++s) {
    const char* text = lamw_strerror(static_cast<lamw_status>(s));
    CAPTURE(s);
    REQUIRE(text != nullptr);
    CHECK(std::strlen(text) > 0);
  }
  CHECK(std::string(lamw_cell_status_name(LAMW_CELL_VALID)) == "valid");
  CHECK(std::string(lamw_cell_status_name(LAMW_CELL_INTEGRAL_SINGULAR)) ==
        "integral_singular");
}
