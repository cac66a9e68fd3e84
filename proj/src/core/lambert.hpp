#ifndef LAMW_CORE_LAMBERT_HPP
#define LAMW_CORE_LAMBERT_HPP

#include <complex>
#include <numbers>

#include "core/tolerance.hpp"

namespace lamw {

// W0 branch point: W0 is real-valued on [kBranchPoint, inf) and analytic on
// the complex plane minus the ray (-inf, kBranchPoint].
inline constexpr double kBranchPoint = -1.0 / std::numbers::e;

// Pass as `terms` to let the series pick its own length (cutoff 1e-16
// relative, at most 200 terms).
inline constexpr int kAutoTerms = 0;

// One row of the integral-vs-closed-form identity check
//   integral of g(t)^nu over [0, pi]  ==  pi * nu^nu / Gamma(1 + nu).
struct NbCheckRecord {
  double nu;
  double lhs;        // quadrature value
  double rhs;        // closed form
  double rel_error;  // |lhs - rhs| / max(|rhs|, 1e-300)
};

// Principal-branch log(1 + u) without forming 1 + u when that would lose
// digits; safe against overflow in |u|^2.
std::complex<double> log1p_complex(const std::complex<double>& u);

// W0(x) as the integral (1/pi) * int_0^pi log(1 + x g(t)) dt.
// The real overload returns a real number (the complex overload delegates to
// it when Im x = 0, so real arguments never pick up spurious imaginary dust).
// Throws SingularIntegrandError when a sampled 1 + x g(t) vanishes or lands
// on the negative real axis, and NoConvergenceError when the quadrature
// exhausts its subdivisions. Correct output is only guaranteed off the real
// ray x < kBranchPoint; elsewhere the explorer module maps what happens.
double w0_integral(double x, const Tolerance& tol = {});
std::complex<double> w0_integral(const std::complex<double>& x,
                                 const Tolerance& tol = {});

// W0(x) by its Taylor series sum_{n>=1} (-n)^(n-1)/n! x^n, |x| < 1/e strict.
// terms > 0 sums exactly that many terms; kAutoTerms applies the cutoff rule.
double w0_series(double x, int terms = kAutoTerms);
std::complex<double> w0_series(const std::complex<double>& x,
                               int terms = kAutoTerms);

// Reference oracle: Halley iteration on w e^w = x, accepted only when the
// residual |w e^w - x| <= max(1e-15, 1e-15 |x|). Domain error for real
// x < kBranchPoint; NoConvergenceError after tol.max_iterations.
double w0_halley(double x, const Tolerance& tol = {});
std::complex<double> w0_halley(const std::complex<double>& x,
                               const Tolerance& tol = {});

// The omega constant W0(1), i.e. the real root of w e^w = 1. Identical to
// w0_integral(1.0, tol) by definition.
double omega(const Tolerance& tol = {});

// Closed form pi * nu^nu / Gamma(1 + nu), with 0^0 = 1.
double nb_rhs(double nu);

// Quadrature of g^nu against the closed form; propagates quadrature
// non-convergence.
NbCheckRecord nb_check(double nu, const Tolerance& tol = {});

// Re-derives the series from the integral identity one power at a time:
// returns max over nu = 1..n_terms of
//   | (-1)^(nu-1) x^nu/nu * (1/pi) int g^nu  -  (-nu)^(nu-1)/nu! x^nu |.
// Requires |x| <= 0.3 and 1 <= n_terms <= 30.
double series_integral_consistency(double x, int n_terms,
                                   const Tolerance& tol = {});

}  // namespace lamw

#endif
