// kinf/model_space.hpp - trace interpolation inside K_B
#ifndef KINF_MODEL_SPACE_HPP
#define KINF_MODEL_SPACE_HPP

#include <functional>
#include <vector>

#include "kinf/blaschke.hpp"

namespace kinf {

/// Coefficients gamma_j = -(a_j/|a_j|) w_j / B_j(a_j); -1 prefactor at the
/// origin.  w must have one entry per zero.
std::vector<Complex> gamma_coeffs(const BlaschkeData& data, const std::vector<Complex>& w);

/// g(z) = sum_j conj(gamma_j) (1 - |a_j|^2) / (1 - conj(a_j) z).
Complex cauchy_series_eval(const BlaschkeData& data, const std::vector<Complex>& gamma,
                           const DiskPoint& z);

/// The interpolant
///   f(z) = sum_j B_j(z) (w_j / B_j(a_j)) (1 - |a_j|^2) / (1 - conj(a_j) z),
/// which satisfies f(a_k) = w_k term by term.
Complex interpolant_eval(const BlaschkeData& data, const std::vector<Complex>& w,
                         const DiskPoint& z);

/// Boundary involution: given samples f(zeta_k) on the uniform circle grid
/// zeta_k = e^{2 pi i k / M}, returns conj(zeta_k) conj(f(zeta_k)) B(zeta_k).
/// Requires at least 8 samples.
std::vector<Complex> involution_boundary(const BlaschkeData& data,
                                         const std::vector<Complex>& samples);

struct KernelExpansion {
  std::vector<Complex> coeffs;  // in the plain Cauchy-kernel basis k_{a_j}
  double condition_estimate;    // 1-norm estimate for the solved system
  bool ill_conditioned;         // condition estimate above 1e12
};

inline constexpr double kIllConditionThreshold = 1e12;

/// Solve the collocation system sum_j c_j k_{a_j}(a_i) = w_i.  The solve runs
/// in the normalized basis (1 - |a_j|^2) k_{a_j} (unit diagonal, entries
/// bounded by 2); the raw basis loses all accuracy once gaps get small.
KernelExpansion k2_interpolant(const BlaschkeData& data, const std::vector<Complex>& w);

/// Evaluate sum_j c_j / (1 - conj(a_j) z).
Complex kernel_expansion_eval(const BlaschkeData& data, const std::vector<Complex>& coeffs,
                              const DiskPoint& z);

using Evaluable = std::function<Complex(const DiskPoint&)>;

struct SupNormEstimate {
  double value;
  int grid;        // finest grid actually evaluated
  bool converged;  // doubling changed the max by <= 1e-6 relative
};

/// Boundary sup norm by uniform circle sampling.  grid must be a power of
/// two in [2^6, 2^20].  With refine set, the grid doubles until the max
/// stabilizes to 1e-6 relative or the 2^20 cap is hit.
SupNormEstimate sup_norm_estimate(const Evaluable& f, int grid, bool refine);

/// Interpolant for the constant trace w = 1 in closed form:
///   z -> 1 - conj(B(0)) B(z).
/// The returned callable owns a copy of the product data.
Evaluable constant_trace_interpolant(const BlaschkeData& data);

}  // namespace kinf

#endif
