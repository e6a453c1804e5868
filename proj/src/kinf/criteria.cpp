// kinf/criteria.cpp
#include "kinf/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kinf/model_space.hpp"
#include "kinf/stable_sum.hpp"

namespace kinf {

namespace {

void check_aligned(const BlaschkeData& data, std::size_t len) {
  if (len != static_cast<std::size_t>(data.n()))
    throw std::invalid_argument("trace length must match the zero count");
}

}  // namespace

std::vector<Complex> dual_transform(const BlaschkeData& data, const std::vector<Complex>& w) {
  check_aligned(data, w.size());
  int n = data.n();
  std::vector<Complex> t(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const DiskPoint& ak = data.zeros().at(k);
    StableComplexSum sum;
    for (int j = 0; j < n; ++j) {
      // 1 - a_j conj(a_k) = conj(1 - conj(a_j) a_k), cancellation-free form.
      Complex den = data.derivative_at_zero(j) *
                    std::conj(one_minus_conj_mul(data.zeros().at(j), ak));
      sum.add(w[static_cast<std::size_t>(j)] / den);
    }
    t[static_cast<std::size_t>(k)] = sum.get();
  }
  return t;
}

double criterion_sup(const BlaschkeData& data, const std::vector<Complex>& w) {
  double best = 0.0;
  for (const Complex& v : dual_transform(data, w)) best = std::max(best, std::abs(v));
  return best;
}

double consistency_check(const BlaschkeData& data, const std::vector<Complex>& w) {
  std::vector<Complex> t = dual_transform(data, w);
  std::vector<Complex> gamma = gamma_coeffs(data, w);
  double sup_t = 0.0;
  for (const Complex& v : t) sup_t = std::max(sup_t, std::abs(v));
  double worst = 0.0;
  for (int k = 0; k < data.n(); ++k) {
    Complex g = cauchy_series_eval(data, gamma, data.zeros().at(k));
    worst = std::max(worst, std::abs(t[static_cast<std::size_t>(k)] - std::conj(g)));
  }
  return worst / (1.0 + sup_t);
}

double weighted_p_sum(const BlaschkeData& data, const std::vector<Complex>& w, double p) {
  check_aligned(data, w.size());
  if (!(p > 0.0)) throw std::invalid_argument("exponent must be positive");
  StableSum sum;
  for (int j = 0; j < data.n(); ++j)
    sum.add(std::pow(std::abs(w[static_cast<std::size_t>(j)]), p) * data.zeros().at(j).gap);
  return sum.get();
}

K1Report k1_necessary_conditions(const BlaschkeData& data, const std::vector<Complex>& w) {
  std::vector<Complex> t = dual_transform(data, w);
  return K1Report{weighted_p_sum(data, w, 1.0), weighted_p_sum(data, t, 1.0)};
}

CriterionReport criterion_report(const BlaschkeData& data, const std::vector<Complex>& w) {
  std::vector<Complex> t = dual_transform(data, w);
  double sup_t = 0.0;
  for (const Complex& v : t) sup_t = std::max(sup_t, std::abs(v));
  StableSum abs_w;
  for (const Complex& v : w) abs_w.add(std::abs(v));
  double bound = abs_w.get() / data.interpolation_constant();
  double sum1 = weighted_p_sum(data, w, 1.0);
  double sum_dual = weighted_p_sum(data, t, 1.0);
  return CriterionReport{std::move(t), sup_t, bound, sum1, sum_dual};
}

CounterexampleReport radial_counterexample(const BlaschkeData& data,
                                           const std::vector<double>& beta) {
  check_aligned(data, beta.size());
  int n = data.n();
  for (int j = 0; j < n; ++j) {
    const DiskPoint& a = data.zeros().at(j);
    if (a.phase != 0.0)
      throw std::invalid_argument("counterexample needs zeros on the positive radius");
    if (j > 0 && !(a.gap < data.zeros().at(j - 1).gap))
      throw std::invalid_argument("counterexample needs strictly increasing moduli");
  }
  for (double b : beta)
    if (!(b >= 0.0) || !std::isfinite(b))
      throw std::invalid_argument("beta entries must be nonnegative");

  // Everything is real on the positive radius; the derivative factors are
  // carried literally so the S_k terms stay the quotients from the proof.
  std::vector<double> deriv(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    deriv[static_cast<std::size_t>(j)] = data.derivative_at_zero(j).real();
    w[static_cast<std::size_t>(j)] =
        deriv[static_cast<std::size_t>(j)] * data.zeros().at(j).one_minus_sq() *
        std::abs(beta[static_cast<std::size_t>(j)]);
  }
  std::vector<double> s(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    double gk = data.zeros().at(k).gap;
    StableSum sum;
    for (int j = 0; j < n; ++j) {
      double gj = data.zeros().at(j).gap;
      double one_minus_prod = gj + gk - gj * gk;  // 1 - a_j a_k
      sum.add(w[static_cast<std::size_t>(j)] /
              (deriv[static_cast<std::size_t>(j)] * one_minus_prod));
    }
    s[static_cast<std::size_t>(k)] = sum.get();
  }
  std::vector<double> prefix(static_cast<std::size_t>(n));
  StableSum pref;
  bool domination = true;
  bool weight_bound = true;
  for (int k = 0; k < n; ++k) {
    pref.add(beta[static_cast<std::size_t>(k)]);
    prefix[static_cast<std::size_t>(k)] = pref.get();
    if (s[static_cast<std::size_t>(k)] + 1e-12 * (1.0 + prefix[static_cast<std::size_t>(k)]) <
        prefix[static_cast<std::size_t>(k)])
      domination = false;
    if (std::abs(w[static_cast<std::size_t>(k)]) >
        beta[static_cast<std::size_t>(k)] * (1.0 + 1e-12) + 1e-300)
      weight_bound = false;
  }
  double ratio = prefix.back() > 0.0 ? s.back() / prefix.back() : 0.0;
  return CounterexampleReport{std::move(w), std::move(s), std::move(prefix),
                              ratio, domination, weight_bound};
}

}  // namespace kinf
