// kinf/majorant.hpp - majorant functions and the integral/dyadic tests
#ifndef KINF_MAJORANT_HPP
#define KINF_MAJORANT_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kinf/zero_sequence.hpp"

namespace kinf {

/// Candidate majorant on (0,1].  The monotonicity axioms (nondecreasing,
/// phi(t)/t nonincreasing) are a declared contract checked by
/// validate_majorant, not enforced at construction: two of the built-in
/// families violate them near t = 1 and the point is to report that.
class Majorant {
 public:
  /// Evaluate; throws std::domain_error outside (0,1].
  double operator()(double t) const;

  /// phi(2^{-j}) in closed form for the built-ins, so deep levels work
  /// far below the subnormal range of 2^{-j} itself.
  double at_dyadic(int j) const;

  const std::string& label() const { return label_; }
  const std::map<std::string, double>& params() const { return params_; }

  /// Round-trip spec string, e.g. "phi1:alpha=0.5" or "const".
  std::string spec_string() const;

  static Majorant phi1(double alpha);   // t^alpha, alpha in (0,1)
  static Majorant phi2(double eps);     // (log(2/t))^{-1-eps}, eps > 0
  static Majorant phi3(double eps);     // (log(3/t))^{-1}(loglog(3/t))^{-1-eps}
  static Majorant constant();           // 1
  static Majorant custom(std::string label, std::function<double(double)> f);

  /// Parse "phi1:alpha=0.5", "phi2:eps=1.0", "phi3:eps=0.5", "const".
  static Majorant parse(const std::string& spec);

 private:
  Majorant() = default;
  std::string label_;
  std::map<std::string, double> params_;
  std::function<double(double)> fn_;
  std::function<double(int)> dyadic_;  // null for custom
};

/// Dispatch by label ("phi1" | "phi2" | "phi3" | "constant").
Majorant builtin_majorant(const std::string& label,
                          const std::map<std::string, double>& params);

struct MajorantValidation {
  bool ok;
  double t_low = 0.0;       // first violating pair, when !ok
  double t_high = 0.0;
  std::string which;        // "nondecreasing" | "ratio-nonincreasing" | "positive"
};

/// Both grid monotonicity checks on 1024 log-spaced points of [2^-60, 1].
MajorantValidation validate_majorant(const Majorant& phi);

struct UpperTypeEstimate {
  double gamma;
  double c;
  bool valid;  // finite and stable under grid doubling (< 1% change)
};

/// C = max phi(st) / (s^gamma phi(t)) over a log grid of admissible pairs
/// s >= 1, 0 < t <= 1/s.  gamma must lie in [0, 1].
UpperTypeEstimate upper_type_estimate(const Majorant& phi, double gamma);

/// Partial sums sum_{j<=m} phi(2^{-j}) for m = 1..levels.
std::vector<double> dyadic_sum(const Majorant& phi, int levels);

struct IntegralTest {
  std::vector<double> dyadic_partial;    // running dyadic sums, level 1..J
  std::vector<double> integral_partial;  // integral over (2^{-m}, 1], m = 1..J
  double integral;                       // over (2^{-J}, 1]
  bool converged;                        // dyadic tail extrapolation passed
  bool sandwich_ok;                      // both dyadic bounds at every level
  int first_violation;                   // 1-based level, 0 when sandwich_ok
};

inline constexpr double kDefaultQuadTol = 1e-9;

/// Integral of phi(t)/t over (2^{-J}, 1] by per-interval adaptive Simpson on
/// the dyadic decomposition, with the two-sided dyadic-sum sandwich checked
/// at every truncation level (slack = the quadrature tolerance).
IntegralTest integral_test(const Majorant& phi, int levels, double quad_tol = kDefaultQuadTol);

/// max_j |w_j| / phi(1 - |a_j|), through the gaps.
double xphi_norm(const ZeroSequence& seq, const std::vector<Complex>& w, const Majorant& phi);

}  // namespace kinf

#endif
