// tests/oracles.hpp - independent reference computations for the test suite
//
// Everything here works on plain std::complex / double values with the
// textbook formulas, deliberately sharing no code with the library under
// test.  Expected values in the tests are frozen from these oracles.
#ifndef KINF_TESTS_ORACLES_HPP
#define KINF_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cx = std::complex<double>;

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double ln2 = 0.6931471805599453094172321214581766;

/// Single factor (|a|/a)(a - z)/(1 - conj(a) z); z at a = 0 by convention.
inline cx factor(cx a, cx z) {
  if (a == cx{0.0, 0.0}) return z;
  return (std::abs(a) / a) * (a - z) / (1.0 - std::conj(a) * z);
}

inline cx product(const std::vector<cx>& zeros, cx z) {
  cx acc{1.0, 0.0};
  for (cx a : zeros) acc *= factor(a, z);
  return acc;
}

inline cx subproduct(const std::vector<cx>& zeros, std::size_t skip, cx z) {
  cx acc{1.0, 0.0};
  for (std::size_t k = 0; k < zeros.size(); ++k)
    if (k != skip) acc *= factor(zeros[k], z);
  return acc;
}

/// Central difference along the real axis; O(h^2) truncation.
inline cx derivative_fd(const std::vector<cx>& zeros, cx z, double h) {
  return (product(zeros, z + h) - product(zeros, z - h)) / (2.0 * h);
}

inline double rho(cx a, cx b) { return std::abs((a - b) / (1.0 - std::conj(b) * a)); }

inline double frostman(const std::vector<cx>& zeros, cx zeta) {
  double sum = 0.0;
  for (cx a : zeros) sum += (1.0 - std::abs(a)) / std::abs(zeta - a);
  return sum;
}

/// Carleson separation min_j prod_{k != j} rho(a_k, a_j), plain arithmetic.
inline double delta(const std::vector<cx>& zeros) {
  double best = 2.0;
  for (std::size_t j = 0; j < zeros.size(); ++j) {
    double prod = 1.0;
    for (std::size_t k = 0; k < zeros.size(); ++k)
      if (k != j) prod *= rho(zeros[k], zeros[j]);
    best = std::min(best, prod);
  }
  return best;
}

inline std::vector<cx> dyadic_zeros(int n) {
  std::vector<cx> zeros;
  for (int j = 1; j <= n; ++j) zeros.push_back(cx{1.0 - std::ldexp(1.0, -j), 0.0});
  return zeros;
}

inline double harmonic(int k) {
  double sum = 0.0;
  for (int j = 1; j <= k; ++j) sum += 1.0 / j;
  return sum;
}

/// Closed forms for int_a^1 phi(t)/t dt.
inline double phi1_integral(double alpha, double a) {
  return (1.0 - std::pow(a, alpha)) / alpha;
}

inline double phi2_integral(double eps, double a) {
  // substitute u = log(2/t): int u^{-1-eps} du over [log 2, log(2/a)]
  return (std::pow(ln2, -eps) - std::pow(std::log(2.0 / a), -eps)) / eps;
}

inline double phi3_integral(double eps, double a) {
  // substitute v = log log(3/t)
  double v_lo = std::log(std::log(3.0));
  double v_hi = std::log(std::log(3.0 / a));
  return (std::pow(v_lo, -eps) - std::pow(v_hi, -eps)) / eps;
}

/// Partial and full sums of sum_j 2^{-alpha j}.
inline double phi1_dyadic_partial(double alpha, int levels) {
  double q = std::exp2(-alpha);
  return q * (1.0 - std::pow(q, levels)) / (1.0 - q);
}

inline double phi1_dyadic_limit(double alpha) { return 1.0 / (std::exp2(alpha) - 1.0); }

/// sum_{j<=J} ((j+1) ln 2)^{-2} and its limit, for phi2 with eps = 1.
inline double phi2_dyadic_partial(int levels) {
  double sum = 0.0;
  for (int j = levels; j >= 1; --j) sum += 1.0 / ((j + 1.0) * (j + 1.0));
  return sum / (ln2 * ln2);
}

inline double phi2_dyadic_limit() { return (pi * pi / 6.0 - 1.0) / (ln2 * ln2); }

// --- frozen two-point values, zeros {0, 1/2} ------------------------------
// B(z) = z (1/2 - z)/(1 - z/2).  Exact rationals:
//   B_1(a_1) = b_{1/2}(0) = 1/2        B_2(a_2) = b_0(1/2) = 1/2
//   B'(0) = 1/2                        B'(1/2) = -2/3
//   gamma for w = (1,1): (2, -2)
//   dual transform T = (1/2, 0); k1 sums (3/2, 1/2)
//   Frostman sum at zeta = -1: 1 + (1/2)/(3/2) = 4/3
//   kernel collocation coefficients for w = (1,1): (1, 0)
inline constexpr double two_point_subproduct = 0.5;
inline constexpr double two_point_deriv_0 = 0.5;
inline constexpr double two_point_deriv_1 = -2.0 / 3.0;
inline constexpr double two_point_gamma_0 = 2.0;
inline constexpr double two_point_gamma_1 = -2.0;
inline constexpr double two_point_dual_0 = 0.5;
inline constexpr double two_point_dual_1 = 0.0;
inline constexpr double two_point_k1_a = 1.5;
inline constexpr double two_point_k1_b = 0.5;
inline constexpr double two_point_frostman_minus1 = 4.0 / 3.0;

// rho(1/2, 3/4) = (1/4)/(5/8) = 2/5; rho(0, z) = |z|
inline constexpr double rho_half_threequarters = 0.4;

// H_10 as an exact double (frozen from harmonic(10))
inline constexpr double harmonic_10 = 2.9289682539682538;

// consecutive dyadic separation rho(a_j, a_{j+1}) = 1/(3 - 2^{-j})
inline double dyadic_consecutive_rho(int j) { return 1.0 / (3.0 - std::ldexp(1.0, -j)); }

}  // namespace oracle

#endif
