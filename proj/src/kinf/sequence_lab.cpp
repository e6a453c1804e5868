// kinf/sequence_lab.cpp
#include "kinf/sequence_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kinf/stable_sum.hpp"

namespace kinf {

namespace {

void check_generated_n(int n) {
  if (n < 1 || n > kMaxGeneratedN)
    throw std::invalid_argument("generated sequence length must lie in [1, 60]");
}

}  // namespace

ZeroSequence radial_dyadic(int n) {
  check_generated_n(n);
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) pts.push_back(DiskPoint::interior(std::ldexp(1.0, -j), 0.0));
  return ZeroSequence(std::move(pts));
}

ZeroSequence radial_geometric(int n, double ratio) {
  check_generated_n(n);
  if (!(ratio > 0.0) || !(ratio < 1.0))
    throw std::invalid_argument("geometric ratio must lie in (0, 1)");
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) pts.push_back(DiskPoint::interior(std::pow(ratio, j), 0.0));
  return ZeroSequence(std::move(pts));
}

ZeroSequence tangential(int n, double kappa) {
  check_generated_n(n);
  if (!std::isfinite(kappa) || kappa < 0.0)
    throw std::invalid_argument("tangential twist must be a nonnegative number");
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j)
    pts.push_back(DiskPoint::interior(std::ldexp(1.0, -j), kappa * std::exp2(-0.5 * j)));
  return ZeroSequence(std::move(pts));
}

double frostman_sum(const ZeroSequence& seq, const DiskPoint& zeta) {
  if (!zeta.on_circle()) throw std::invalid_argument("Frostman sum needs a circle point");
  StableSum sum;
  for (const DiskPoint& a : seq.points()) sum.add(a.gap / difference_abs(a, zeta));
  return sum.get();
}

FrostmanEstimate frostman_sup(const ZeroSequence& seq, int grid) {
  if (grid < 8) throw std::invalid_argument("Frostman grid must have at least 8 points");
  auto f = [&](double phase) { return frostman_sum(seq, DiskPoint::circle(phase)); };
  double best = -1.0;
  double best_phase = 0.0;
  for (int k = 0; k < grid; ++k) {
    double phase = kTwoPi * k / grid;
    double v = f(phase);
    if (v > best) {
      best = v;
      best_phase = phase;
    }
  }
  // Golden-section polish inside the winning cell and its two neighbors.
  const double invphi = 0.6180339887498948482;
  double lo = best_phase - kTwoPi / grid;
  double hi = best_phase + kTwoPi / grid;
  double c = hi - invphi * (hi - lo);
  double d = lo + invphi * (hi - lo);
  double fc = f(normalize_phase(c));
  double fd = f(normalize_phase(d));
  for (int it = 0; it < 80; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - invphi * (hi - lo);
      fc = f(normalize_phase(c));
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + invphi * (hi - lo);
      fd = f(normalize_phase(d));
    }
  }
  if (fc > best) {
    best = fc;
    best_phase = normalize_phase(c);
  }
  if (fd > best) {
    best = fd;
    best_phase = normalize_phase(d);
  }
  return FrostmanEstimate{best, best_phase, grid};
}

double min_separation(const ZeroSequence& seq) {
  if (seq.n() == 1) return 1.0;
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < seq.n(); ++i)
    for (int k = i + 1; k < seq.n(); ++k)
      best = std::min(best, pseudohyperbolic(seq.at(i), seq.at(k)));
  return best;
}

SequenceReport make_report(const BlaschkeData& data, int frostman_grid) {
  FrostmanEstimate fr = frostman_sup(data.zeros(), frostman_grid);
  return SequenceReport{data.delta(), data.interpolation_constant(),
                        min_separation(data.zeros()), fr.sup, fr.grid};
}

double carleson_delta(const ZeroSequence& seq) { return BlaschkeData(seq).delta(); }

}  // namespace kinf
