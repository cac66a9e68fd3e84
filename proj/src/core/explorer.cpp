#include "core/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/format.hpp"
#include "core/lambert.hpp"

namespace lamw {

namespace {

// Exact endpoints keep golden CSV files stable against step roundoff.
double lattice(double lo, double hi, std::size_t n, std::size_t i) {
  if (i == n - 1) {
    return hi;
  }
  return lo + double(i) * (hi - lo) / double(n - 1);
}

}  // namespace

const char* to_string(CellStatus status) {
  switch (status) {
    case CellStatus::valid: return "valid";
    case CellStatus::mismatch: return "mismatch";
    case CellStatus::integral_singular: return "integral_singular";
    case CellStatus::integral_no_converge: return "integral_no_converge";
    case CellStatus::oracle_fail: return "oracle_fail";
  }
  return "unknown";
}

GridCell classify_point(const std::complex<double>& x, double match_abs,
                        double match_rel, const Tolerance& tol) {
  if (!(match_abs > 0.0) || !(match_rel > 0.0)) {
    throw std::invalid_argument("classify_point: match thresholds must be > 0");
  }

  GridCell cell;
  cell.x = x;

  bool singular = false;
  bool no_converge = false;
  try {
    cell.w_int = w0_integral(x, tol);
  } catch (const SingularIntegrandError&) {
    singular = true;
  } catch (const NoConvergenceError&) {
    no_converge = true;
  }

  try {
    cell.w_ref = w0_halley(x, tol);
  } catch (const std::exception&) {
    // domain error on the cut or Halley divergence; recorded below
  }

  if (singular) {
    cell.status = CellStatus::integral_singular;
  } else if (no_converge) {
    cell.status = CellStatus::integral_no_converge;
  } else if (!cell.w_ref) {
    cell.status = CellStatus::oracle_fail;
  } else {
    const double err = std::abs(*cell.w_int - *cell.w_ref);
    cell.abs_err = err;
    const double threshold = std::max(match_abs, match_rel * std::abs(*cell.w_ref));
    cell.status = (err <= threshold) ? CellStatus::valid : CellStatus::mismatch;
  }
  return cell;
}

std::vector<GridCell> sweep(const GridSpec& spec) {
  if (!(spec.re_min < spec.re_max) || !(spec.im_min < spec.im_max) ||
      !std::isfinite(spec.re_min) || !std::isfinite(spec.re_max) ||
      !std::isfinite(spec.im_min) || !std::isfinite(spec.im_max)) {
    throw std::invalid_argument("sweep: grid bounds must be finite with min < max");
  }
  if (spec.nx < 2 || spec.ny < 2) {
    throw std::invalid_argument("sweep: nx and ny must be >= 2");
  }

  std::vector<GridCell> cells;
  cells.reserve(spec.nx * spec.ny);
  for (std::size_t j = 0; j < spec.ny; ++j) {
    const double im = lattice(spec.im_min, spec.im_max, spec.ny, j);
    for (std::size_t i = 0; i < spec.nx; ++i) {
      const double re = lattice(spec.re_min, spec.re_max, spec.nx, i);
      cells.push_back(
          classify_point({re, im}, spec.match_abs, spec.match_rel, spec.tol));
    }
  }
  return cells;
}

std::string to_csv(const std::vector<GridCell>& cells) {
  std::string out = "re,im,w_int_re,w_int_im,w_ref_re,w_ref_im,abs_err,status\n";
  for (const GridCell& cell : cells) {
    out += format_double(cell.x.real());
    out += ',';
    out += format_double(cell.x.imag());
    out += ',';
    if (cell.w_int) {
      out += format_double(cell.w_int->real());
      out += ',';
      out += format_double(cell.w_int->imag());
    } else {
      out += ',';
    }
    out += ',';
    if (cell.w_ref) {
      out += format_double(cell.w_ref->real());
      out += ',';
      out += format_double(cell.w_ref->imag());
    } else {
      out += ',';
    }
    out += ',';
    if (cell.abs_err) {
      out += format_double(*cell.abs_err);
    }
    out += ',';
    out += to_string(cell.status);
    out += '\n';
  }
  return out;
}

}  // namespace lamw
