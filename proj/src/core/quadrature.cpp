#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace lamw {

namespace {

// 15-point Kronrod abscissae on [-1, 1] (positive half; the last entry is the
// centre). Odd indices are the embedded 7-point Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min();

template <typename T>
struct Panel {
  double lo;
  double hi;
  T value;
  double error;
};

// Worst error on top. Ties resolved by interval position so heap behavior is
// a pure function of the panel set.
template <typename T>
bool panel_before(const Panel<T>& a, const Panel<T>& b) {
  if (a.error != b.error) return a.error < b.error;
  return a.lo > b.lo;
}

// One Gauss-Kronrod 7-15 application on [lo, hi]. The error estimate is the
// Kronrod-Gauss difference scaled against the deviation integral resasc,
// floored at 50 eps times the absolute integral so it never claims digits
// that double precision cannot hold.
template <typename T, typename F>
Panel<T> gk15(const F& f, double lo, double hi) {
  const double h = 0.5 * (hi - lo);
  const double c = 0.5 * (lo + hi);

  T fv1[7];
  T fv2[7];
  const T fc = f(c);

  T resg = kWg[3] * fc;
  T resk = kWgk[7] * fc;
  double resabs = kWgk[7] * std::abs(fc);

  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    const T fsum = fv1[j] + fv2[j];
    if (j % 2 != 0) {
      resg += kWg[j / 2] * fsum;
    }
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }

  const T reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
  }

  resabs *= h;
  resasc *= h;
  double err = std::abs(resk - resg) * h;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > kTiny / (50.0 * kEps)) {
    err = std::max(kEps * 50.0 * resabs, err);
  }

  return {lo, hi, resk * h, err};
}

template <typename T>
QuadResult<T> integrate_impl(const std::function<T(double)>& f,
                             Interval interval, const Tolerance& tol) {
  validate_tolerance(tol);
  if (!std::isfinite(interval.lo) || !std::isfinite(interval.hi) ||
      !(interval.lo < interval.hi)) {
    throw std::domain_error("integrate: interval must satisfy lo < hi, both finite");
  }

  std::vector<Panel<T>> heap;
  heap.push_back(gk15<T>(f, interval.lo, interval.hi));
  std::size_t evaluations = 15;

  T value = heap.front().value;
  double err_sum = heap.front().error;

  const auto done = [&] {
    return err_sum <= std::max(tol.abs_tol, tol.rel_tol * std::abs(value));
  };

  std::size_t subdivisions = 0;
  bool converged = done();
  while (!converged && subdivisions < tol.max_subdivisions) {
    std::pop_heap(heap.begin(), heap.end(), panel_before<T>);
    const Panel<T> worst = heap.back();
    heap.pop_back();

    const double mid = 0.5 * (worst.lo + worst.hi);
    const Panel<T> left = gk15<T>(f, worst.lo, mid);
    const Panel<T> right = gk15<T>(f, mid, worst.hi);
    evaluations += 30;
    ++subdivisions;

    value += left.value + right.value - worst.value;
    err_sum += left.error + right.error - worst.error;

    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), panel_before<T>);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), panel_before<T>);

    converged = done();
  }

  // Resum in storage order: drops the incremental-update roundoff that the
  // running totals accumulate over many subdivisions.
  T total{};
  double err_total = 0.0;
  for (const Panel<T>& p : heap) {
    total += p.value;
    err_total += p.error;
  }
  return {total, err_total, evaluations, converged};
}

}  // namespace

void validate_tolerance(const Tolerance& tol) {
  if (!(tol.abs_tol >= 0.0) || !(tol.rel_tol >= 0.0)) {
    throw std::invalid_argument("tolerance: abs_tol and rel_tol must be >= 0");
  }
  if (tol.abs_tol == 0.0 && tol.rel_tol == 0.0) {
    throw std::invalid_argument("tolerance: abs_tol and rel_tol cannot both be 0");
  }
  if (tol.max_subdivisions < 1 || tol.max_iterations < 1) {
    throw std::invalid_argument(
        "tolerance: max_subdivisions and max_iterations must be >= 1");
  }
}

namespace detail {

QuadResult<double> integrate_real(const std::function<double(double)>& f,
                                  Interval interval, const Tolerance& tol) {
  return integrate_impl<double>(f, interval, tol);
}

QuadResult<std::complex<double>> integrate_complex(
    const std::function<std::complex<double>(double)>& f, Interval interval,
    const Tolerance& tol) {
  return integrate_impl<std::complex<double>>(f, interval, tol);
}

}  // namespace detail

}  // namespace lamw
