// kinf/blaschke.hpp - finite Blaschke products and their subproducts
#ifndef KINF_BLASCHKE_HPP
#define KINF_BLASCHKE_HPP

#include <vector>

#include "kinf/zero_sequence.hpp"

namespace kinf {

/// Product accumulation strategy.  kAuto switches to the log-magnitude /
/// accumulated-phase form when the factor count exceeds 64 or any factor
/// magnitude drops below 1e-8, where a direct product starts to lose ground.
enum class ProductMode { kAuto, kDirect, kLogDomain };

inline constexpr int kLogDomainFactorThreshold = 64;
inline constexpr double kLogDomainMagnitudeThreshold = 1e-8;

/// Zero sequence together with the derived per-zero data every routine
/// downstream needs: subproducts at their own zero, derivatives, and the
/// two separation constants.
class BlaschkeData {
 public:
  explicit BlaschkeData(ZeroSequence zeros);

  const ZeroSequence& zeros() const { return zeros_; }
  int n() const { return zeros_.n(); }

  /// B_j(a_j), the product over k != j of b_{a_k}(a_j).
  Complex subproduct_at_zero(int j) const;

  /// B'(a_j) = -(|a_j|/a_j) B_j(a_j) / (1 - |a_j|^2); -1 prefactor at a_j = 0.
  Complex derivative_at_zero(int j) const;

  /// Unit prefactor of the factor at a_j: e^{i arg a_j}, or -1 at the origin.
  Complex zero_direction(int j) const;

  /// delta = min_j |B_j(a_j)|.
  double delta() const { return delta_; }

  /// min_j |B'(a_j)| (1 - |a_j|), the uniform separation constant that
  /// controls the l^1 trace bound.
  double interpolation_constant() const { return interp_const_; }

  Complex value_at_origin() const { return origin_value_; }

 private:
  ZeroSequence zeros_;
  std::vector<Complex> subproducts_;
  std::vector<Complex> derivatives_;
  std::vector<Complex> directions_;
  Complex origin_value_;
  double delta_ = 0.0;
  double interp_const_ = 0.0;
};

/// Evaluate the full product B(z).
Complex blaschke_eval(const BlaschkeData& data, const DiskPoint& z,
                      ProductMode mode = ProductMode::kAuto);

/// Evaluate the subproduct B_j(z) that omits the factor at a_j.
Complex subproduct_eval(const BlaschkeData& data, int j, const DiskPoint& z,
                        ProductMode mode = ProductMode::kAuto);

/// All subproducts B_j(z) for j = 0..n-1 in one pass, via prefix and suffix
/// partial products (no division, so zeros of individual factors are safe).
std::vector<Complex> all_subproducts(const BlaschkeData& data, const DiskPoint& z);

/// Central-difference estimate of B'(z) from four axis-aligned samples.
/// Requires step > 0 and |z| < 1 - 2 * step.
Complex numeric_derivative(const BlaschkeData& data, const DiskPoint& z, double step);

}  // namespace kinf

#endif
