#include "core/lambert.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/gamma.hpp"
#include "core/kernel.hpp"
#include "core/quadrature.hpp"

namespace lamw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvE = 1.0 / std::numbers::e;

bool finite(double v) { return std::isfinite(v); }
bool finite(const std::complex<double>& v) {
  return std::isfinite(v.real()) && std::isfinite(v.imag());
}

// Halley step on f(w) = w e^w - x. Third order; the returned value is
// certified by the residual alone, so the iteration path does not matter.
template <typename T>
T halley(const T& x, T w, const Tolerance& tol) {
  validate_tolerance(tol);
  const double target = std::max(1e-15, 1e-15 * std::abs(x));
  for (std::size_t i = 0; i <= tol.max_iterations; ++i) {
    const T ew = std::exp(w);
    const T f = w * ew - x;
    if (std::abs(f) <= target) {
      return w;
    }
    if (i == tol.max_iterations) {
      break;
    }
    const T f1 = ew * (1.0 + w);
    if (std::abs(f1) == 0.0) {
      w += 1e-12;  // stationary point w = -1; nudge off it
      continue;
    }
    w -= f / (f1 - 0.5 * f * (ew * (2.0 + w)) / f1);
    if (!finite(w)) {
      throw NoConvergenceError("w0_halley: iteration left the finite plane");
    }
  }
  throw NoConvergenceError("w0_halley: residual not met within max_iterations");
}

// Integrand of the W0 integral for real x. log1p keeps full accuracy as
// g -> 0 near t = pi.
double w_integrand(double x, double t) {
  const double u = x * kernel(t).g;
  if (u <= -1.0) {
    throw SingularIntegrandError(
        "w0_integral: sampled 1 + x g(t) is not positive");
  }
  return std::log1p(u);
}

// Complex counterpart. A sample with 1 + x g on the closed negative real
// axis (imaginary part within 1e-12) has no usable principal logarithm, so
// it is reported rather than silently branch-switched.
std::complex<double> w_integrand(const std::complex<double>& x, double t) {
  const std::complex<double> u = x * kernel(t).g;
  const double re1 = 1.0 + u.real();
  const bool on_axis = std::abs(u.imag()) <= 1e-12;
  if ((re1 < 0.0 && on_axis) || (re1 == 0.0 && u.imag() == 0.0)) {
    throw SingularIntegrandError(
        "w0_integral: sampled 1 + x g(t) fell on the negative real axis");
  }
  return log1p_complex(u);
}

template <typename T>
T w0_integral_impl(const T& x, const Tolerance& tol) {
  if (!finite(x)) {
    throw std::domain_error("w0_integral: x must be finite");
  }
  const QuadResult<T> q =
      integrate([&x](double t) { return w_integrand(x, t); }, {0.0, kPi}, tol);
  if (!q.converged) {
    throw NoConvergenceError("w0_integral: quadrature did not converge");
  }
  return q.value / kPi;
}

template <typename T>
T series_sum(const T& x, int terms) {
  if (terms < 0) {
    throw std::invalid_argument(
        "w0_series: terms must be positive, or kAutoTerms");
  }
  const double r = std::abs(x);
  if (!(r < kInvE)) {
    throw std::domain_error("w0_series: series requires |x| < 1/e");
  }
  if (r == 0.0) {
    return T{};
  }
  const bool automatic = (terms == kAutoTerms);
  const int cap = automatic ? 200 : terms;
  // ratio of consecutive coefficients: a_{n+1}/a_n = -((n+1)/n)^(n-1)
  T term = x;
  T sum = x;
  for (int n = 1; n < cap; ++n) {
    term *= x * (-std::pow((n + 1.0) / n, n - 1.0));
    if (automatic && std::abs(term) < 1e-16 * std::abs(sum)) {
      break;
    }
    sum += term;
  }
  return sum;
}

}  // namespace

std::complex<double> log1p_complex(const std::complex<double>& u) {
  const double a = u.real();
  const double b = u.imag();
  const double theta = std::atan2(b, 1.0 + a);
  if (std::abs(a) > 1e8 || std::abs(b) > 1e8) {
    return {std::log(std::hypot(1.0 + a, b)), theta};
  }
  if (a > -0.5) {
    // |1+u|^2 - 1 without cancellation; a(2+a) keeps sign structure intact
    return {0.5 * std::log1p(a * (2.0 + a) + b * b), theta};
  }
  // 1 + a is exact here (Sterbenz) and |1+u| is far from 1
  return {std::log(std::hypot(1.0 + a, b)), theta};
}

double w0_integral(double x, const Tolerance& tol) {
  return w0_integral_impl(x, tol);
}

std::complex<double> w0_integral(const std::complex<double>& x,
                                 const Tolerance& tol) {
  if (x.imag() == 0.0) {
    return {w0_integral(x.real(), tol), 0.0};
  }
  return w0_integral_impl(x, tol);
}

double w0_series(double x, int terms) { return series_sum(x, terms); }

std::complex<double> w0_series(const std::complex<double>& x, int terms) {
  if (x.imag() == 0.0) {
    return {w0_series(x.real(), terms), 0.0};
  }
  return series_sum(x, terms);
}

double w0_halley(double x, const Tolerance& tol) {
  if (!finite(x)) {
    throw std::domain_error("w0_halley: x must be finite");
  }
  if (x < kBranchPoint) {
    throw std::domain_error(
        "w0_halley: no principal value on the real ray x < -1/e");
  }
  const double start = (x >= 0.0) ? std::log1p(x) : x * std::numbers::e;
  return halley(x, start, tol);
}

std::complex<double> w0_halley(const std::complex<double>& x,
                               const Tolerance& tol) {
  if (!finite(x)) {
    throw std::domain_error("w0_halley: x must be finite");
  }
  if (x.imag() == 0.0) {
    return {w0_halley(x.real(), tol), 0.0};
  }
  return halley(x, log1p_complex(x), tol);
}

double omega(const Tolerance& tol) { return w0_integral(1.0, tol); }

double nb_rhs(double nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw std::domain_error("nb_rhs: nu must be finite and >= 0");
  }
  if (nu == 0.0) {
    return kPi;  // 0^0 = 1
  }
  return kPi * std::exp(nu * std::log(nu) - log_gamma(1.0 + nu));
}

NbCheckRecord nb_check(double nu, const Tolerance& tol) {
  const double rhs = nb_rhs(nu);
  const QuadResult<double> q = integrate(
      [nu](double t) { return kernel_power(t, nu); }, {0.0, kPi}, tol);
  if (!q.converged) {
    throw NoConvergenceError("nb_check: quadrature did not converge");
  }
  const double rel = std::abs(q.value - rhs) / std::max(std::abs(rhs), 1e-300);
  return {nu, q.value, rhs, rel};
}

double series_integral_consistency(double x, int n_terms,
                                   const Tolerance& tol) {
  if (!std::isfinite(x) || std::abs(x) > 0.3) {
    throw std::domain_error("series_integral_consistency: |x| <= 0.3 required");
  }
  if (n_terms < 1 || n_terms > 30) {
    throw std::invalid_argument(
        "series_integral_consistency: n_terms must be in [1, 30]");
  }
  double max_dev = 0.0;
  double xpow = 1.0;
  for (int nu = 1; nu <= n_terms; ++nu) {
    xpow *= x;
    const double sign = (nu % 2 != 0) ? 1.0 : -1.0;  // (-1)^(nu-1)
    const QuadResult<double> q = integrate(
        [nu](double t) { return kernel_power(t, nu); }, {0.0, kPi}, tol);
    if (!q.converged) {
      throw NoConvergenceError(
          "series_integral_consistency: quadrature did not converge");
    }
    const double lhs = sign * xpow / nu * (q.value / kPi);
    // (-nu)^(nu-1)/nu! = (-1)^(nu-1) exp((nu-1) ln nu - ln Gamma(nu+1))
    const double coeff =
        sign * std::exp((nu - 1) * std::log(double(nu)) - log_gamma(nu + 1.0));
    max_dev = std::max(max_dev, std::abs(lhs - coeff * xpow));
  }
  return max_dev;
}

}  // namespace lamw
