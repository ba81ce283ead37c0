#include "rxnkit/metrics/alignment.hpp"

#include <algorithm>
#include <tuple>
#include <vector>

namespace rxnkit::metrics {

double iou(const BBox& a, const BBox& b) {
  long long ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  long long iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (ix <= 0 || iy <= 0) return 0.0;
  long long inter = ix * iy;
  long long uni = a.area() + b.area() - inter;
  return uni > 0 ? static_cast<double>(inter) / static_cast<double>(uni) : 0.0;
}

bool AlignmentMap::add(int pred_id, int gt_id, double value) {
  if (pairs_.contains(pred_id) || gt_taken_.contains(gt_id)) return false;
  pairs_.emplace(pred_id, MatchedPair{gt_id, value});
  gt_taken_.emplace(gt_id, pred_id);
  return true;
}

std::optional<int> AlignmentMap::gt_for(int pred_id) const {
  auto it = pairs_.find(pred_id);
  if (it == pairs_.end()) return std::nullopt;
  return it->second.gt_id;
}

AlignmentMap align_objects(std::span<const DetectedObject> pred,
                           std::span<const DetectedObject> gt) {
  struct Candidate {
    double iou;
    int pred_id;
    int gt_id;
  };
  std::vector<Candidate> candidates;
  for (const DetectedObject& p : pred) {
    for (const DetectedObject& g : gt) {
      if (p.cls != g.cls) continue;
      double v = iou(p.bbox, g.bbox);
      if (v > kIouThreshold) candidates.push_back({v, p.id, g.id});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    return std::tie(a.pred_id, a.gt_id) < std::tie(b.pred_id, b.gt_id);
  });
  AlignmentMap map;
  for (const Candidate& c : candidates) map.add(c.pred_id, c.gt_id, c.iou);
  return map;
}

}  // namespace rxnkit::metrics
