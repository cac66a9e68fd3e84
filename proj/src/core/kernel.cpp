#include "core/kernel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace lamw {

namespace {

constexpr double kPi = std::numbers::pi;

// exp underflows to zero (past the subnormal range) below this exponent.
constexpr double kExpUnderflow = -745.0;

// log g(t) = log(sin t / t) + t cot t.
//
// Both terms are even functions with removable singularities at t = 0:
//   log(sin t / t) = -t^2/6 - t^4/180 - t^6/2835 - ...
//   t cot t        = 1 - t^2/3 - t^4/45 - 2 t^6/945 - ...
// Their sum below keeps absolute error near 1 ulp for t < 1e-2; the direct
// formula would lose digits to the cancellation in log(sin t) - log(t).
double log_g_small(double t) {
  const double t2 = t * t;
  return 1.0 - t2 * (0.5 + t2 * (1.0 / 36.0 +
                     t2 * (1.0 / 405.0 +
                     t2 * (1.0 / 4200.0 +
                     t2 * (1.0 / 42525.0)))));
}

// Near t = pi the factor exp(t cot t) collapses: with eps = pi - t,
// cot t = -cot eps ~ -1/eps, so log g ~ -pi/eps. Series for cot eps; the
// result is far below the underflow threshold for eps < 1e-8, so the modest
// accuracy of the truncation is irrelevant.
double log_g_near_pi(double t) {
  const double eps = kPi - t;
  const double cot_eps = 1.0 / eps - eps * (1.0 / 3.0 + eps * eps / 45.0);
  return std::log(std::sin(eps) / t) - t * cot_eps;
}

}  // namespace

KernelPoint kernel(double t) {
  if (!std::isfinite(t) || t < 0.0 || t > kPi) {
    throw std::domain_error("kernel: t must be finite and in [0, pi]");
  }
  if (t == 0.0) {
    return {t, std::numbers::e, 1.0};
  }
  if (t == kPi) {
    return {t, 0.0, -std::numeric_limits<double>::infinity()};
  }

  double log_g;
  if (t < 1e-2) {
    log_g = log_g_small(t);
  } else if (kPi - t < 1e-8) {
    log_g = log_g_near_pi(t);
  } else {
    const double s = std::sin(t);
    log_g = std::log(s / t) + t * (std::cos(t) / s);
  }

  const double g = (log_g < kExpUnderflow) ? 0.0 : std::exp(log_g);
  return {t, g, log_g};
}

double kernel_power(double t, double nu) {
  if (!std::isfinite(nu) || nu < 0.0) {
    throw std::domain_error("kernel_power: nu must be finite and >= 0");
  }
  const KernelPoint p = kernel(t);
  if (nu == 0.0) {
    return 1.0;  // includes g = 0 at t = pi: 0^0 := 1
  }
  if (p.g == 0.0) {
    return 0.0;
  }
  const double e = nu * p.log_g;
  return (e < kExpUnderflow) ? 0.0 : std::exp(e);
}

}  // namespace lamw
