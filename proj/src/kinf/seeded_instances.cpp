// kinf/seeded_instances.cpp
#include "kinf/seeded_instances.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace kinf {

namespace {

SplitMix64 instance_stream(std::uint64_t seed, int index, std::uint64_t salt) {
  if (index < 0) throw std::invalid_argument("instance index must be nonnegative");
  SplitMix64 mix(seed ^ salt);
  std::uint64_t base = mix.next();
  return SplitMix64(base + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(index));
}

}  // namespace

ZeroSequence seeded_sequence(std::uint64_t seed, int index) {
  SplitMix64 rng = instance_stream(seed, index, 0x5e9031a7c3ULL);
  int n = 2 + static_cast<int>(rng.next() % 63);  // 2..64
  double ratio = 0.30 + 0.10 * rng.uniform();
  int mode = static_cast<int>(rng.next() % 3);
  double twist = kTwoPi * rng.uniform();
  std::vector<DiskPoint> pts;
  pts.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    double gap = std::pow(ratio, j);
    double phase = 0.0;
    if (mode == 0)
      phase = kTwoPi * rng.uniform();
    else if (mode == 2)
      phase = twist * std::pow(ratio, 0.5 * j);
    pts.push_back(DiskPoint::interior(gap, phase));
  }
  return ZeroSequence(std::move(pts));
}

std::vector<Complex> seeded_targets(std::uint64_t seed, int index, int n) {
  if (n < 1) throw std::invalid_argument("target count must be positive");
  SplitMix64 rng = instance_stream(seed, index, 0x7a96e75ULL);
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    double r = std::sqrt(rng.uniform());
    double theta = kTwoPi * rng.uniform();
    w[static_cast<std::size_t>(j)] = Complex{r * std::cos(theta), r * std::sin(theta)};
  }
  return w;
}

}  // namespace kinf
