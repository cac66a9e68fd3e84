#ifndef LAMW_CORE_TOLERANCE_HPP
#define LAMW_CORE_TOLERANCE_HPP

#include <cstddef>

namespace lamw {

// Accuracy request shared by the quadrature driver and the iterative solvers.
// A result is accepted once the error estimate drops below
// max(abs_tol, rel_tol * |value|).
struct Tolerance {
  double abs_tol = 1e-13;
  double rel_tol = 1e-12;
  std::size_t max_subdivisions = 2000;
  std::size_t max_iterations = 100;
};

}  // namespace lamw

#endif
