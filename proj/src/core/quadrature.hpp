#ifndef LAMW_CORE_QUADRATURE_HPP
#define LAMW_CORE_QUADRATURE_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <type_traits>
#include <utility>

#include "core/tolerance.hpp"

namespace lamw {

struct Interval {
  double lo;
  double hi;
};

// Outcome of one adaptive integration. converged = false is a normal return
// (estimate still populated), reported when max_subdivisions ran out before
// the error estimate dropped below max(abs_tol, rel_tol * |value|).
template <typename T>
struct QuadResult {
  T value;
  double error_estimate;
  std::size_t evaluations;
  bool converged;
};

namespace detail {
QuadResult<double> integrate_real(const std::function<double(double)>& f,
                                  Interval interval, const Tolerance& tol);
QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, Interval interval,
    const Tolerance& tol);
}  // namespace detail

// Adaptive Gauss-Kronrod 7-15 integration of f over [lo, hi]; f maps double
// to double or to std::complex<double> and the result type follows it.
// Panels are bisected worst-error-first; per-panel error estimates follow the
// scaled Kronrod-minus-Gauss recipe with a roundoff floor, so the estimate
// stays honest down to machine precision. Deterministic: identical inputs
// give bit-identical results. The rule is open (never samples lo or hi
// exactly), but f must still be total on the closed interval.
// Throws std::domain_error on an invalid interval and std::invalid_argument
// on an invalid tolerance.
template <typename F>
auto integrate(F&& f, Interval interval, const Tolerance& tol = {}) {
  using R = std::invoke_result_t<F&, double>;
  if constexpr (std::is_same_v<R, std::complex<double>>) {
    return detail::integrate_complex(
        std::function<std::complex<double>(double)>(std::forward<F>(f)),
        interval, tol);
  } else {
    static_assert(std::is_convertible_v<R, double>,
                  "integrand must return double or std::complex<double>");
    return detail::integrate_real(
        std::function<double(double)>(std::forward<F>(f)), interval, tol);
  }
}

// Shared by every operation that accepts a Tolerance.
// Throws std::invalid_argument on out-of-range fields.
void validate_tolerance(const Tolerance& tol);

}  // namespace lamw

#endif
