// kinf/zero_sequence.cpp
#include "kinf/zero_sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace kinf {

ZeroSequence::ZeroSequence(std::vector<DiskPoint> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("zero sequence must be nonempty");
  for (const DiskPoint& p : points_) {
    if (!(p.gap > 0.0) || p.gap > 1.0)
      throw std::invalid_argument("zeros must lie strictly inside the disk");
    if (!std::isfinite(p.phase))
      throw std::invalid_argument("zero phase must be finite");
  }
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t k = i + 1; k < points_.size(); ++k)
      if (difference_abs(points_[i], points_[k]) == 0.0)
        throw std::invalid_argument("zeros must be pairwise distinct");
}

const DiskPoint& ZeroSequence::at(int j) const {
  if (j < 0 || j >= n()) throw std::out_of_range("zero index out of range");
  return points_[static_cast<std::size_t>(j)];
}

std::string to_json(const ZeroSequence& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (const DiskPoint& p : seq.points())
    arr.push_back({{"gap", p.gap}, {"phase", p.phase}});
  return arr.dump(2);
}

ZeroSequence sequence_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sequence JSON: ") + e.what());
  }
  if (!doc.is_array()) throw std::invalid_argument("sequence JSON must be an array");
  std::vector<DiskPoint> pts;
  pts.reserve(doc.size());
  for (const auto& item : doc) {
    if (!item.is_object() || !item.contains("gap") || !item.contains("phase"))
      throw std::invalid_argument("sequence entries need gap and phase fields");
    if (!item["gap"].is_number() || !item["phase"].is_number())
      throw std::invalid_argument("gap and phase must be numbers");
    double gap = item["gap"].get<double>();
    double phase = item["phase"].get<double>();
    if (!(gap > 0.0) || gap > 1.0)
      throw std::invalid_argument("sequence JSON: gap must lie in (0, 1]");
    pts.push_back(DiskPoint::interior(gap, phase));
  }
  return ZeroSequence(std::move(pts));
}

}  // namespace kinf
