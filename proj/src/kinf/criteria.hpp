// kinf/criteria.hpp - trace criterion sums and the radial counterexample
#ifndef KINF_CRITERIA_HPP
#define KINF_CRITERIA_HPP

#include <vector>

#include "kinf/blaschke.hpp"

namespace kinf {

/// T_k = sum_j w_j / (B'(a_j) (1 - a_j conj(a_k))), k = 0..n-1, inner sums
/// in ascending j.  Denominators satisfy |B'(a_j)| |1 - a_j conj(a_k)| >=
/// |B'(a_j)| (1 - |a_j|), so they never vanish for a valid zero set.
std::vector<Complex> dual_transform(const BlaschkeData& data, const std::vector<Complex>& w);

/// max_k |T_k|, the truncation statistic standing in for the sup condition.
double criterion_sup(const BlaschkeData& data, const std::vector<Complex>& w);

/// Cross-check of the two routes to the criterion sums:
///   max_k |T_k - conj(g(a_k))| / (1 + max_k |T_k|),
/// where g is the Cauchy series with coefficients gamma_j.
double consistency_check(const BlaschkeData& data, const std::vector<Complex>& w);

/// sum_j |w_j|^p (1 - |a_j|), computed through the gaps.  Requires p > 0.
double weighted_p_sum(const BlaschkeData& data, const std::vector<Complex>& w, double p);

struct K1Report {
  double carleson_sum_1;     // sum_j |w_j| (1 - |a_j|)
  double carleson_sum_dual;  // same sum with |T_k| in place of |w_k|
};

K1Report k1_necessary_conditions(const BlaschkeData& data, const std::vector<Complex>& w);

struct CriterionReport {
  std::vector<Complex> T;
  double sup_T;
  double ell1_bound;  // sum_j |w_j| / min_j(|B'(a_j)|(1 - |a_j|))
  double carleson_sum_1;
  double carleson_sum_dual;
};

CriterionReport criterion_report(const BlaschkeData& data, const std::vector<Complex>& w);

struct CounterexampleReport {
  std::vector<double> w;       // w_j = B'(a_j) (1 - a_j^2) |beta_j|
  std::vector<double> s;       // S_k, all-nonnegative criterion sums
  std::vector<double> prefix;  // P_k = sum_{j<=k} beta_j
  double ratio_last;           // S_N / P_N (0 when P_N = 0)
  bool domination_ok;          // S_k >= P_k for every k (1e-12 slack)
  bool weight_bound_ok;        // |w_j| <= beta_j (1e-12 slack)
};

/// The escape-from-l^1 construction on a radial increasing zero set.  Zeros
/// must sit on the positive radius (phase 0) with strictly increasing
/// moduli; beta must be nonnegative and aligned.
CounterexampleReport radial_counterexample(const BlaschkeData& data,
                                           const std::vector<double>& beta);

}  // namespace kinf

#endif
