#ifndef LAMW_CORE_EXPLORER_HPP
#define LAMW_CORE_EXPLORER_HPP

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/tolerance.hpp"

namespace lamw {

// Per-point verdict on whether the integral representation reproduces W0.
// Every failure mode of the two evaluations is data, never an exception.
enum class CellStatus {
  valid,                 // both computed, |w_int - w_ref| within threshold
  mismatch,              // both computed, disagreement beyond threshold
  integral_singular,     // integrand hit the negative real axis
  integral_no_converge,  // quadrature ran out of subdivisions
  oracle_fail,           // Halley reference failed (domain or divergence)
};

const char* to_string(CellStatus status);

struct GridSpec {
  double re_min;
  double re_max;
  double im_min;
  double im_max;
  std::size_t nx;
  std::size_t ny;
  Tolerance tol{};
  // Match thresholds are looser than the quadrature tolerance on purpose:
  // the classification should reflect the representation, not quadrature noise.
  double match_abs = 1e-8;
  double match_rel = 1e-6;
};

struct GridCell {
  std::complex<double> x;
  std::optional<std::complex<double>> w_int;
  std::optional<std::complex<double>> w_ref;
  std::optional<double> abs_err;  // set only when both results exist
  CellStatus status;
};

// Evaluates the integral and the Halley oracle independently at x and grades
// the pair. Integral failures take precedence over oracle failures in the
// status so a cell never hides a singular integrand behind oracle trouble.
GridCell classify_point(const std::complex<double>& x, double match_abs,
                        double match_rel, const Tolerance& tol = {});

// classify_point over the nx * ny lattice, row-major with re varying fastest
// and im ascending; both axis endpoints are sampled exactly. Deterministic.
// Throws std::invalid_argument on a malformed spec.
std::vector<GridCell> sweep(const GridSpec& spec);

// CSV rendering of a sweep: fixed header, one row per cell in sweep order,
// absent values as empty fields, shortest round-trip decimals.
std::string to_csv(const std::vector<GridCell>& cells);

}  // namespace lamw

#endif
