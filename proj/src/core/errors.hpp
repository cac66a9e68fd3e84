#ifndef LAMW_CORE_ERRORS_HPP
#define LAMW_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lamw {

// Adaptive refinement ran out of subdivisions (or iterations, for the
// root-finding oracle) before meeting the requested tolerance.
class NoConvergenceError : public std::runtime_error {
public:
  explicit NoConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

// The integrand of the W0 integral hit log(z) with z on the closed negative
// real axis at a sampled abscissa.  Reported instead of returning a
// branch-ambiguous value.
class SingularIntegrandError : public std::runtime_error {
public:
  explicit SingularIntegrandError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lamw

#endif
