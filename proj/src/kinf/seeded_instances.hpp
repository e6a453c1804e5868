// kinf/seeded_instances.hpp - deterministic random test instances
#ifndef KINF_SEEDED_INSTANCES_HPP
#define KINF_SEEDED_INSTANCES_HPP

#include <cstdint>
#include <vector>

#include "kinf/zero_sequence.hpp"

namespace kinf {

/// splitmix64 stream; fixed algorithm so instances are identical across
/// platforms and standard library versions.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Random interpolating sequence: geometric gaps ratio^j with ratio drawn
/// from [0.30, 0.40] and one of three phase layouts (random, radial,
/// slow twist).  Any phase layout keeps delta above 0.05 because radial
/// alignment minimizes pairwise pseudohyperbolic separation.
ZeroSequence seeded_sequence(std::uint64_t seed, int index);

/// Random targets with |w_j| <= 1, matched to seeded_sequence(seed, index).
std::vector<Complex> seeded_targets(std::uint64_t seed, int index, int n);

}  // namespace kinf

#endif
