// kinf/sequence_lab.hpp - model sequences and their separation diagnostics
#ifndef KINF_SEQUENCE_LAB_HPP
#define KINF_SEQUENCE_LAB_HPP

#include "kinf/blaschke.hpp"
#include "kinf/zero_sequence.hpp"

namespace kinf {

inline constexpr int kMaxGeneratedN = 60;

/// Radial zeros a_j = 1 - 2^{-j}, j = 1..n.  Requires 1 <= n <= 60.
ZeroSequence radial_dyadic(int n);

/// Radial zeros a_j = 1 - ratio^j.  Requires 1 <= n <= 60 and ratio in (0, 1).
ZeroSequence radial_geometric(int n, double ratio);

/// Dyadic gaps with slowly rotating phases kappa * 2^{-j/2}.  kappa = 0
/// degenerates to the radial dyadic sequence.
ZeroSequence tangential(int n, double kappa);

/// Frostman-type sum over the zeros at a circle point zeta:
///   sum_j (1 - |a_j|) / |zeta - a_j|.
double frostman_sum(const ZeroSequence& seq, const DiskPoint& zeta);

struct FrostmanEstimate {
  double sup;           // largest sum seen
  double argmax_phase;  // phase attaining it
  int grid;             // uniform grid size that seeded the search
};

/// Maximize the Frostman sum over a uniform circle grid, then polish the
/// best cell with a golden-section pass.  Requires grid >= 8.
FrostmanEstimate frostman_sup(const ZeroSequence& seq, int grid);

/// Smallest pairwise pseudohyperbolic distance.  1 for a single zero.
double min_separation(const ZeroSequence& seq);

struct SequenceReport {
  double delta;         // min_j |B_j(a_j)|
  double interp_const;  // min_j |B'(a_j)| (1 - |a_j|)
  double min_separation;
  double frostman_sup;
  int frostman_grid;
};

SequenceReport make_report(const BlaschkeData& data, int frostman_grid);

/// delta for a bare sequence (builds the product data once and discards it).
double carleson_delta(const ZeroSequence& seq);

}  // namespace kinf

#endif
