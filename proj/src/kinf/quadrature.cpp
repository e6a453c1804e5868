// kinf/quadrature.cpp
#include "kinf/quadrature.hpp"

#include <cmath>

namespace kinf {

namespace {

constexpr int kMaxDepth = 48;

double simpson(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_ad(const std::function<double(double)>& f, double a, double b, double fa,
                  double fm, double fb, double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m);
  double rm = 0.5 * (m + b);
  double flm = f(lm);
  double frm = f(rm);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double err_est = (left + right - whole) / 15.0;
  if (std::abs(err_est) <= tol) return left + right + err_est;
  if (depth >= kMaxDepth) throw QuadratureError("adaptive quadrature failed to converge");
  return simpson_ad(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
         simpson_ad(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol) {
  if (a == b) return 0.0;
  double fa = f(a);
  double fb = f(b);
  double fm = f(0.5 * (a + b));
  double whole = simpson(fa, fm, fb, b - a);
  return simpson_ad(f, a, b, fa, fm, fb, whole, tol, 0);
}

}  // namespace kinf
