// kinf/quadrature.hpp - adaptive Simpson on an interval
#ifndef KINF_QUADRATURE_HPP
#define KINF_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace kinf {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Simpson with the classical 1/15 Richardson error estimate.
/// tol is an absolute tolerance for the whole interval.  Throws
/// QuadratureError if the recursion depth limit is exhausted before the
/// estimate settles.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol);

}  // namespace kinf

#endif
