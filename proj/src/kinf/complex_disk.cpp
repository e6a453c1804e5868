// kinf/complex_disk.cpp
#include "kinf/complex_disk.hpp"

#include <cmath>
#include <stdexcept>

namespace kinf {

double reduce_angle(double u) {
  u = std::fmod(u, kTwoPi);
  if (u > kPi)
    u -= kTwoPi;
  else if (u <= -kPi)
    u += kTwoPi;
  return u;
}

double normalize_phase(double u) {
  if (!std::isfinite(u)) throw std::invalid_argument("phase must be finite");
  u = std::fmod(u, kTwoPi);
  if (u < 0.0) u += kTwoPi;
  if (u >= kTwoPi) u = 0.0;  // fmod can round up to 2*pi
  return u;
}

DiskPoint DiskPoint::interior(double gap, double phase) {
  if (!(gap > 0.0) || gap > 1.0)
    throw std::invalid_argument("interior point needs gap in (0, 1]");
  DiskPoint p{gap, normalize_phase(phase)};
  if (p.gap == 1.0) p.phase = 0.0;
  return p;
}

DiskPoint DiskPoint::circle(double phase) {
  return DiskPoint{0.0, normalize_phase(phase)};
}

DiskPoint DiskPoint::from_complex(Complex z) {
  double r = std::hypot(z.real(), z.imag());
  if (r > 1.0 + 1e-12) throw std::invalid_argument("point outside the closed disk");
  double gap = 1.0 - r;
  if (gap < 0.0) gap = 0.0;
  if (gap == 1.0) return origin();
  double phase = normalize_phase(std::atan2(z.imag(), z.real()));
  return DiskPoint{gap, phase};
}

Complex DiskPoint::value() const {
  double r = 1.0 - gap;
  return {r * std::cos(phase), r * std::sin(phase)};
}

Complex one_minus_conj_mul(const DiskPoint& a, const DiskPoint& z) {
  // 1 - r_a r_z e^{iu} with u = arg z - arg a.  Using
  //   Re = 2 sin^2(u/2) + s cos u,  Im = -(1 - s) sin u,  s = 1 - r_a r_z,
  // every term is computed from gaps and half-angle sines, so nothing
  // cancels when both points approach the same circle direction.
  double u = reduce_angle(z.phase - a.phase);
  double s = a.gap + z.gap - a.gap * z.gap;
  double sh = std::sin(0.5 * u);
  return {2.0 * sh * sh + s * std::cos(u), -(1.0 - s) * std::sin(u)};
}

double difference_abs(const DiskPoint& a, const DiskPoint& z) {
  // |a - z| = |(r_a - r_z) + r_z (1 - e^{iu})| with the same half-angle trick.
  double u = reduce_angle(z.phase - a.phase);
  double rz = 1.0 - z.gap;
  double sh = std::sin(0.5 * u);
  double re = (z.gap - a.gap) + rz * 2.0 * sh * sh;
  double im = -rz * std::sin(u);
  return std::hypot(re, im);
}

Complex blaschke_factor(const DiskPoint& a, const DiskPoint& z) {
  if (!(a.gap > 0.0)) throw std::invalid_argument("factor zero must lie strictly inside the disk");
  if (z.gap < 0.0 || z.gap > 1.0) throw std::invalid_argument("evaluation point outside the closed disk");
  if (a.is_origin()) return z.value();
  // (|a|/a)(a - z) = e^{-i arg a} (a - z) = r_a - r_z e^{iu}; the phase
  // factors cancel against the same rotation of the numerator, so the
  // quotient below never leaves the gap representation.
  double u = reduce_angle(z.phase - a.phase);
  double sh = std::sin(0.5 * u);
  double sn = std::sin(u);
  double num_re = (z.gap - a.gap) + (1.0 - z.gap) * 2.0 * sh * sh;
  double num_im = -(1.0 - z.gap) * sn;
  double s = a.gap + z.gap - a.gap * z.gap;
  double den_re = 2.0 * sh * sh + s * std::cos(u);
  double den_im = -(1.0 - s) * sn;
  return Complex{num_re, num_im} / Complex{den_re, den_im};
}

double pseudohyperbolic(const DiskPoint& a, const DiskPoint& b) {
  if (!(a.gap > 0.0) || !(b.gap > 0.0))
    throw std::invalid_argument("pseudohyperbolic distance needs interior points");
  return difference_abs(a, b) / std::abs(one_minus_conj_mul(a, b));
}

}  // namespace kinf
