// kinf/zero_sequence.hpp - validated finite zero sets
#ifndef KINF_ZERO_SEQUENCE_HPP
#define KINF_ZERO_SEQUENCE_HPP

#include <string>
#include <vector>

#include "kinf/complex_disk.hpp"

namespace kinf {

/// Finite sequence of prospective Blaschke zeros.  Construction enforces the
/// whole contract: at least one point, every point strictly inside the disk,
/// and pairwise distinct points (positive pseudohyperbolic separation).
class ZeroSequence {
 public:
  explicit ZeroSequence(std::vector<DiskPoint> points);

  int n() const { return static_cast<int>(points_.size()); }
  const DiskPoint& at(int j) const;
  const std::vector<DiskPoint>& points() const { return points_; }

 private:
  std::vector<DiskPoint> points_;
};

/// Serialize as a JSON array of {"gap": g, "phase": p} objects.
std::string to_json(const ZeroSequence& seq);

/// Parse the array form.  Rejects gap <= 0, gap > 1, and non-finite fields.
ZeroSequence sequence_from_json(const std::string& text);

}  // namespace kinf

#endif
