#ifndef LAMW_CORE_KERNEL_HPP
#define LAMW_CORE_KERNEL_HPP

namespace lamw {

// One evaluation of g(t) = (sin t / t) * exp(t * cot t) on [0, pi].
// g decreases strictly from e (at t = 0) to 0 (at t = pi).
// log_g is -infinity at t = pi and finite everywhere else.
struct KernelPoint {
  double t;
  double g;
  double log_g;
};

// Evaluates g and log g at t. Removable singularities at both endpoints are
// filled with their limit values; series expansions keep full accuracy near
// t = 0 and the reflection t = pi - eps handles the right end.
// Throws std::domain_error for t outside [0, pi] or non-finite t.
KernelPoint kernel(double t);

// g(t)^nu computed in the log domain, with 0^0 = 1 so that nu = 0 yields the
// constant integrand 1 on the whole closed interval.
// Throws std::domain_error when t is outside [0, pi] or nu < 0 or non-finite.
double kernel_power(double t, double nu);

}  // namespace lamw

#endif
