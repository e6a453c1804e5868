// kinf/model_space.cpp
#include "kinf/model_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "kinf/linalg.hpp"
#include "kinf/stable_sum.hpp"

namespace kinf {

namespace {

void check_trace_length(const BlaschkeData& data, const std::vector<Complex>& w) {
  if (w.size() != static_cast<std::size_t>(data.n()))
    throw std::invalid_argument("trace length must match the zero count");
}

}  // namespace

std::vector<Complex> gamma_coeffs(const BlaschkeData& data, const std::vector<Complex>& w) {
  check_trace_length(data, w);
  std::vector<Complex> gamma(w.size());
  for (int j = 0; j < data.n(); ++j)
    gamma[static_cast<std::size_t>(j)] =
        -data.zero_direction(j) * w[static_cast<std::size_t>(j)] / data.subproduct_at_zero(j);
  return gamma;
}

Complex cauchy_series_eval(const BlaschkeData& data, const std::vector<Complex>& gamma,
                           const DiskPoint& z) {
  check_trace_length(data, gamma);
  StableComplexSum sum;
  for (int j = 0; j < data.n(); ++j) {
    const DiskPoint& a = data.zeros().at(j);
    sum.add(std::conj(gamma[static_cast<std::size_t>(j)]) * a.one_minus_sq() /
            one_minus_conj_mul(a, z));
  }
  return sum.get();
}

Complex interpolant_eval(const BlaschkeData& data, const std::vector<Complex>& w,
                         const DiskPoint& z) {
  check_trace_length(data, w);
  std::vector<Complex> sub = all_subproducts(data, z);
  StableComplexSum sum;
  for (int j = 0; j < data.n(); ++j) {
    const DiskPoint& a = data.zeros().at(j);
    Complex term = sub[static_cast<std::size_t>(j)] *
                   (w[static_cast<std::size_t>(j)] / data.subproduct_at_zero(j)) *
                   (a.one_minus_sq() / one_minus_conj_mul(a, z));
    sum.add(term);
  }
  return sum.get();
}

std::vector<Complex> involution_boundary(const BlaschkeData& data,
                                         const std::vector<Complex>& samples) {
  int m = static_cast<int>(samples.size());
  if (m < 8) throw std::invalid_argument("involution grid needs at least 8 samples");
  std::vector<Complex> out(samples.size());
  for (int k = 0; k < m; ++k) {
    double phase = kTwoPi * k / m;
    DiskPoint zeta = DiskPoint::circle(phase);
    Complex conj_zeta{std::cos(phase), -std::sin(phase)};
    out[static_cast<std::size_t>(k)] =
        conj_zeta * std::conj(samples[static_cast<std::size_t>(k)]) * blaschke_eval(data, zeta);
  }
  return out;
}

KernelExpansion k2_interpolant(const BlaschkeData& data, const std::vector<Complex>& w) {
  check_trace_length(data, w);
  int n = data.n();
  std::vector<Complex> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const DiskPoint& aj = data.zeros().at(j);
      g[static_cast<std::size_t>(i) * n + j] =
          aj.one_minus_sq() / one_minus_conj_mul(aj, data.zeros().at(i));
    }
  LuFactors lu(g, n);
  std::vector<Complex> c = w;
  lu.solve(c);
  double cond = condition_estimate(g, n, lu);
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] *= data.zeros().at(j).one_minus_sq();
  return KernelExpansion{std::move(c), cond, cond > kIllConditionThreshold};
}

Complex kernel_expansion_eval(const BlaschkeData& data, const std::vector<Complex>& coeffs,
                              const DiskPoint& z) {
  check_trace_length(data, coeffs);
  StableComplexSum sum;
  for (int j = 0; j < data.n(); ++j)
    sum.add(coeffs[static_cast<std::size_t>(j)] / one_minus_conj_mul(data.zeros().at(j), z));
  return sum.get();
}

namespace {

bool power_of_two(int m) { return m > 0 && (m & (m - 1)) == 0; }

double grid_max(const Evaluable& f, int m) {
  double best = 0.0;
  for (int k = 0; k < m; ++k)
    best = std::max(best, std::abs(f(DiskPoint::circle(kTwoPi * k / m))));
  return best;
}

}  // namespace

SupNormEstimate sup_norm_estimate(const Evaluable& f, int grid, bool refine) {
  if (!power_of_two(grid) || grid < (1 << 6) || grid > (1 << 20))
    throw std::invalid_argument("grid must be a power of two in [2^6, 2^20]");
  double cur = grid_max(f, grid);
  int m = grid;
  bool converged = false;
  while (refine && m < (1 << 20)) {
    m *= 2;
    double next = grid_max(f, m);
    // Doubled grids contain the coarse points, so the max never decreases.
    if (next - cur <= 1e-6 * std::max(next, 1e-12)) {
      cur = next;
      converged = true;
      break;
    }
    cur = next;
  }
  return SupNormEstimate{cur, m, converged};
}

Evaluable constant_trace_interpolant(const BlaschkeData& data) {
  Complex b0 = std::conj(data.value_at_origin());
  return [data, b0](const DiskPoint& z) { return 1.0 - b0 * blaschke_eval(data, z); };
}

}  // namespace kinf
