// kinf/complex_disk.hpp - closed-disk points in boundary-gap form
#ifndef KINF_COMPLEX_DISK_HPP
#define KINF_COMPLEX_DISK_HPP

#include <complex>

namespace kinf {

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

using Complex = std::complex<double>;

/// Point of the closed unit disk stored as (gap, phase) with gap = 1 - |z|.
/// Keeping the gap instead of the modulus preserves full relative precision
/// for points exponentially close to the circle, where every quantity of
/// interest (1 - |z|, 1 - |z|^2, 1 - conj(a) z) would otherwise cancel.
struct DiskPoint {
  double gap;    // 1 - |z|, in [0, 1]; 0 on the circle, 1 at the origin
  double phase;  // arg z, normalized to [0, 2*pi); 0 for the origin

  static DiskPoint interior(double gap, double phase);
  static DiskPoint circle(double phase);
  static DiskPoint origin() { return DiskPoint{1.0, 0.0}; }
  static DiskPoint from_complex(Complex z);

  double modulus() const { return 1.0 - gap; }
  bool is_origin() const { return gap == 1.0; }
  bool on_circle() const { return gap == 0.0; }

  /// 1 - |z|^2 = gap * (2 - gap), exact in the gap variable.
  double one_minus_sq() const { return gap * (2.0 - gap); }

  Complex value() const;
};

/// Reduce an angle to (-pi, pi].
double reduce_angle(double u);

/// Normalize an angle to [0, 2*pi).
double normalize_phase(double u);

/// 1 - conj(a) z without cancellation near the circle.
Complex one_minus_conj_mul(const DiskPoint& a, const DiskPoint& z);

/// |a - z| computed through the gap variables.
double difference_abs(const DiskPoint& a, const DiskPoint& z);

/// Single Blaschke factor b_a(z) = (|a|/a) (a - z) / (1 - conj(a) z).
/// At a = 0 the unit prefactor is taken to be -1, so b_0(z) = z.
/// Requires a strictly inside the disk; z may lie on the circle.
Complex blaschke_factor(const DiskPoint& a, const DiskPoint& z);

/// Pseudohyperbolic distance rho(a, b) = |a - b| / |1 - conj(a) b|.
/// Both points must lie strictly inside the disk.
double pseudohyperbolic(const DiskPoint& a, const DiskPoint& b);

}  // namespace kinf

#endif
