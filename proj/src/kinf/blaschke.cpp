// kinf/blaschke.cpp
#include "kinf/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "kinf/stable_sum.hpp"

namespace kinf {

namespace {

Complex product_of_factors(const std::vector<Complex>& factors, ProductMode mode) {
  if (mode == ProductMode::kAuto) {
    mode = ProductMode::kDirect;
    if (factors.size() > static_cast<std::size_t>(kLogDomainFactorThreshold)) {
      mode = ProductMode::kLogDomain;
    } else {
      for (const Complex& f : factors)
        if (std::abs(f) < kLogDomainMagnitudeThreshold) {
          mode = ProductMode::kLogDomain;
          break;
        }
    }
  }
  if (mode == ProductMode::kDirect) {
    Complex acc{1.0, 0.0};
    for (const Complex& f : factors) acc *= f;
    return acc;
  }
  // Log domain: accumulate log-magnitudes and phases separately so long
  // products neither underflow nor smear phase error multiplicatively.
  StableSum log_mag;
  StableSum phase;
  for (const Complex& f : factors) {
    double m = std::abs(f);
    if (m == 0.0) return {0.0, 0.0};
    log_mag.add(std::log(m));
    phase.add(std::arg(f));
  }
  double mag = std::exp(log_mag.get());
  double ph = phase.get();
  return {mag * std::cos(ph), mag * std::sin(ph)};
}

}  // namespace

BlaschkeData::BlaschkeData(ZeroSequence zeros) : zeros_(std::move(zeros)) {
  int n = zeros_.n();
  subproducts_.resize(n);
  derivatives_.resize(n);
  directions_.resize(n);
  for (int j = 0; j < n; ++j) {
    const DiskPoint& a = zeros_.at(j);
    directions_[j] = a.is_origin() ? Complex{-1.0, 0.0}
                                   : Complex{std::cos(a.phase), std::sin(a.phase)};
  }
  std::vector<Complex> factors;
  factors.reserve(n > 1 ? n - 1 : 1);
  double delta = std::numeric_limits<double>::infinity();
  double interp = std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const DiskPoint& a = zeros_.at(j);
    factors.clear();
    for (int k = 0; k < n; ++k)
      if (k != j) factors.push_back(blaschke_factor(zeros_.at(k), a));
    Complex bj = product_of_factors(factors, ProductMode::kAuto);
    subproducts_[j] = bj;
    // B' at a zero: -(|a|/a) B_j(a_j) / (1 - |a|^2), and |a|/a = conj(direction).
    derivatives_[j] = -std::conj(directions_[j]) * bj / a.one_minus_sq();
    delta = std::min(delta, std::abs(bj));
    interp = std::min(interp, std::abs(derivatives_[j]) * a.gap);
  }
  delta_ = delta;
  interp_const_ = interp;
  factors.clear();
  for (int j = 0; j < n; ++j) factors.push_back(blaschke_factor(zeros_.at(j), DiskPoint::origin()));
  origin_value_ = product_of_factors(factors, ProductMode::kAuto);
}

Complex BlaschkeData::subproduct_at_zero(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("zero index out of range");
  return subproducts_[static_cast<std::size_t>(j)];
}

Complex BlaschkeData::derivative_at_zero(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("zero index out of range");
  return derivatives_[static_cast<std::size_t>(j)];
}

Complex BlaschkeData::zero_direction(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("zero index out of range");
  return directions_[static_cast<std::size_t>(j)];
}

Complex blaschke_eval(const BlaschkeData& data, const DiskPoint& z, ProductMode mode) {
  std::vector<Complex> factors;
  factors.reserve(data.n());
  for (int k = 0; k < data.n(); ++k)
    factors.push_back(blaschke_factor(data.zeros().at(k), z));
  return product_of_factors(factors, mode);
}

Complex subproduct_eval(const BlaschkeData& data, int j, const DiskPoint& z, ProductMode mode) {
  if (j < 0 || j >= data.n()) throw std::out_of_range("zero index out of range");
  std::vector<Complex> factors;
  factors.reserve(data.n() > 1 ? data.n() - 1 : 1);
  for (int k = 0; k < data.n(); ++k)
    if (k != j) factors.push_back(blaschke_factor(data.zeros().at(k), z));
  return product_of_factors(factors, mode);
}

std::vector<Complex> all_subproducts(const BlaschkeData& data, const DiskPoint& z) {
  int n = data.n();
  std::vector<Complex> factors(n);
  for (int k = 0; k < n; ++k) factors[static_cast<std::size_t>(k)] = blaschke_factor(data.zeros().at(k), z);
  std::vector<Complex> prefix(n + 1), suffix(n + 1);
  prefix[0] = Complex{1.0, 0.0};
  suffix[static_cast<std::size_t>(n)] = Complex{1.0, 0.0};
  for (int k = 0; k < n; ++k) prefix[k + 1] = prefix[k] * factors[static_cast<std::size_t>(k)];
  for (int k = n - 1; k >= 0; --k) suffix[static_cast<std::size_t>(k)] = factors[static_cast<std::size_t>(k)] * suffix[static_cast<std::size_t>(k) + 1];
  std::vector<Complex> out(n);
  for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(j)] = prefix[j] * suffix[static_cast<std::size_t>(j) + 1];
  return out;
}

Complex numeric_derivative(const BlaschkeData& data, const DiskPoint& z, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("derivative step must be positive");
  if (!(z.gap > 2.0 * step))
    throw std::invalid_argument("stencil leaves the disk: need |z| < 1 - 2 step");
  Complex zc = z.value();
  auto eval = [&](Complex w) { return blaschke_eval(data, DiskPoint::from_complex(w)); };
  Complex dx = (eval(zc + Complex{step, 0.0}) - eval(zc - Complex{step, 0.0})) / (2.0 * step);
  Complex dy = (eval(zc + Complex{0.0, step}) - eval(zc - Complex{0.0, step})) / (2.0 * step);
  // Holomorphic f: f' = d/dx f = -i d/dy f; averaging both stencils cancels
  // the leading even-order truncation error in the non-analytic directions.
  return 0.5 * (dx + Complex{0.0, -1.0} * dy);
}

}  // namespace kinf
