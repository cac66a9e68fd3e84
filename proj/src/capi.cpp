#include "lamw/lamw.h"

#include <complex>
#include <exception>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/errors.hpp"
#include "core/explorer.hpp"
#include "core/gamma.hpp"
#include "core/kernel.hpp"
#include "core/lambert.hpp"
#include "core/quadrature.hpp"
#include "core/tolerance.hpp"

struct lamw_sweep {
  std::vector<lamw::GridCell> cells;
  std::string csv;  // rendered lazily, cached
};

namespace {

thread_local std::string t_last_error;

template <typename Fn>
lamw_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    t_last_error.clear();
    return LAMW_OK;
  } catch (const lamw::NoConvergenceError& e) {
    t_last_error = e.what();
    return LAMW_ERR_NO_CONVERGENCE;
  } catch (const lamw::SingularIntegrandError& e) {
    t_last_error = e.what();
    return LAMW_ERR_SINGULAR_INTEGRAND;
  } catch (const std::domain_error& e) {
    t_last_error = e.what();
    return LAMW_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    t_last_error = e.what();
    return LAMW_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return LAMW_ERR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return LAMW_ERR_INTERNAL;
  }
}

lamw_status null_arg() noexcept {
  t_last_error = "null output or input pointer";
  return LAMW_ERR_INVALID_ARGUMENT;
}

lamw::Tolerance to_core(const lamw_tol* tol) {
  if (tol == nullptr) {
    return {};
  }
  return {tol->abs_tol, tol->rel_tol, tol->max_subdivisions,
          tol->max_iterations};
}

std::complex<double> to_core(lamw_complex z) { return {z.re, z.im}; }

lamw_complex from_core(const std::complex<double>& z) {
  return {z.real(), z.imag()};
}

lamw_grid_cell from_core(const lamw::GridCell& cell) {
  lamw_grid_cell out{};
  out.x = from_core(cell.x);
  if (cell.w_int) {
    out.w_int = from_core(*cell.w_int);
    out.has_w_int = 1;
  }
  if (cell.w_ref) {
    out.w_ref = from_core(*cell.w_ref);
    out.has_w_ref = 1;
  }
  if (cell.abs_err) {
    out.abs_err = *cell.abs_err;
    out.has_abs_err = 1;
  }
  out.status = static_cast<int>(cell.status);
  return out;
}

static_assert(static_cast<int>(lamw::CellStatus::valid) == LAMW_CELL_VALID);
static_assert(static_cast<int>(lamw::CellStatus::mismatch) ==
              LAMW_CELL_MISMATCH);
static_assert(static_cast<int>(lamw::CellStatus::integral_singular) ==
              LAMW_CELL_INTEGRAL_SINGULAR);
static_assert(static_cast<int>(lamw::CellStatus::integral_no_converge) ==
              LAMW_CELL_INTEGRAL_NO_CONVERGE);
static_assert(static_cast<int>(lamw::CellStatus::oracle_fail) ==
              LAMW_CELL_ORACLE_FAIL);

}  // namespace

extern "C" {

lamw_tol lamw_tol_default(void) {
  const lamw::Tolerance t{};
  return {t.abs_tol, t.rel_tol, t.max_subdivisions, t.max_iterations};
}

lamw_status lamw_kernel(double t, lamw_kernel_point* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] {
    const lamw::KernelPoint p = lamw::kernel(t);
    *out = {p.t, p.g, p.log_g};
  });
}

lamw_status lamw_kernel_power(double t, double nu, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::kernel_power(t, nu); });
}

lamw_status lamw_log_gamma(double x, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::log_gamma(x); });
}

lamw_status lamw_w0_integral(lamw_complex x, const lamw_tol* tol,
                             lamw_complex* out) {
  if (out == nullptr) return null_arg();
  return guarded(
      [&] { *out = from_core(lamw::w0_integral(to_core(x), to_core(tol))); });
}

lamw_status lamw_w0_integral_real(double x, const lamw_tol* tol, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::w0_integral(x, to_core(tol)); });
}

lamw_status lamw_w0_series(lamw_complex x, int terms, lamw_complex* out) {
  if (out == nullptr) return null_arg();
  const int n = terms <= 0 ? lamw::kAutoTerms : terms;
  return guarded([&] { *out = from_core(lamw::w0_series(to_core(x), n)); });
}

lamw_status lamw_w0_series_real(double x, int terms, double* out) {
  if (out == nullptr) return null_arg();
  const int n = terms <= 0 ? lamw::kAutoTerms : terms;
  return guarded([&] { *out = lamw::w0_series(x, n); });
}

lamw_status lamw_w0_halley(lamw_complex x, const lamw_tol* tol,
                           lamw_complex* out) {
  if (out == nullptr) return null_arg();
  return guarded(
      [&] { *out = from_core(lamw::w0_halley(to_core(x), to_core(tol))); });
}

lamw_status lamw_w0_halley_real(double x, const lamw_tol* tol, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::w0_halley(x, to_core(tol)); });
}

lamw_status lamw_omega(const lamw_tol* tol, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::omega(to_core(tol)); });
}

lamw_status lamw_nb_rhs(double nu, double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = lamw::nb_rhs(nu); });
}

lamw_status lamw_nb_check(double nu, const lamw_tol* tol,
                          lamw_nb_record* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] {
    const lamw::NbCheckRecord r = lamw::nb_check(nu, to_core(tol));
    *out = {r.nu, r.lhs, r.rhs, r.rel_error};
  });
}

lamw_status lamw_series_integral_consistency(double x, int n_terms,
                                             const lamw_tol* tol,
                                             double* out) {
  if (out == nullptr) return null_arg();
  return guarded([&] {
    *out = lamw::series_integral_consistency(x, n_terms, to_core(tol));
  });
}

lamw_status lamw_classify_point(lamw_complex x, double match_abs,
                                double match_rel, const lamw_tol* tol,
                                lamw_grid_cell* out) {
  if (out == nullptr) return null_arg();
  const double mabs = match_abs <= 0.0 ? 1e-8 : match_abs;
  const double mrel = match_rel <= 0.0 ? 1e-6 : match_rel;
  return guarded([&] {
    *out = from_core(lamw::classify_point(to_core(x), mabs, mrel, to_core(tol)));
  });
}

lamw_status lamw_sweep_run(const lamw_grid_spec* spec, lamw_sweep** out) {
  if (spec == nullptr || out == nullptr) return null_arg();
  return guarded([&] {
    lamw::GridSpec s;
    s.re_min = spec->re_min;
    s.re_max = spec->re_max;
    s.im_min = spec->im_min;
    s.im_max = spec->im_max;
    s.nx = spec->nx;
    s.ny = spec->ny;
    const lamw_tol zero{};
    const bool tol_unset = spec->tol.abs_tol == zero.abs_tol &&
                           spec->tol.rel_tol == zero.rel_tol &&
                           spec->tol.max_subdivisions == zero.max_subdivisions &&
                           spec->tol.max_iterations == zero.max_iterations;
    s.tol = tol_unset ? lamw::Tolerance{} : to_core(&spec->tol);
    if (spec->match_abs > 0.0) s.match_abs = spec->match_abs;
    if (spec->match_rel > 0.0) s.match_rel = spec->match_rel;

    auto result = std::make_unique<lamw_sweep>();
    result->cells = lamw::sweep(s);
    *out = result.release();
  });
}

size_t lamw_sweep_cell_count(const lamw_sweep* sweep) {
  return sweep == nullptr ? 0 : sweep->cells.size();
}

lamw_status lamw_sweep_cell(const lamw_sweep* sweep, size_t index,
                            lamw_grid_cell* out) {
  if (sweep == nullptr || out == nullptr) return null_arg();
  if (index >= sweep->cells.size()) {
    t_last_error = "cell index out of range";
    return LAMW_ERR_INVALID_ARGUMENT;
  }
  *out = from_core(sweep->cells[index]);
  t_last_error.clear();
  return LAMW_OK;
}

lamw_status lamw_sweep_csv(lamw_sweep* sweep, const char** out) {
  if (sweep == nullptr || out == nullptr) return null_arg();
  return guarded([&] {
    if (sweep->csv.empty()) {
      sweep->csv = lamw::to_csv(sweep->cells);
    }
    *out = sweep->csv.c_str();
  });
}

void lamw_sweep_free(lamw_sweep* sweep) { delete sweep; }

const char* lamw_strerror(lamw_status status) {
  switch (status) {
    case LAMW_OK: return "ok";
    case LAMW_ERR_DOMAIN: return "argument outside the function domain";
    case LAMW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LAMW_ERR_NO_CONVERGENCE: return "no convergence within budget";
    case LAMW_ERR_SINGULAR_INTEGRAND: return "singular integrand sample";
    case LAMW_ERR_INTERNAL: return "internal error";
  }
  return "unrecognized status";
}

const char* lamw_cell_status_name(lamw_cell_status status) {
  return lamw::to_string(static_cast<lamw::CellStatus>(status));
}

const char* lamw_last_error(void) { return t_last_error.c_str(); }

const char* lamw_version(void) { return "1.0.0"; }

double lamw_branch_point(void) { return lamw::kBranchPoint; }

}  // extern "C"
