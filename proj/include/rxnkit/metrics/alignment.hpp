#pragma once

#include <map>
#include <optional>
#include <span>

#include "rxnkit/core/types.hpp"

namespace rxnkit::metrics {

inline constexpr double kIouThreshold = 0.5;

// Intersection over union on bin area; 0 when disjoint.
double iou(const BBox& a, const BBox& b);

struct MatchedPair {
  int gt_id = 0;
  double iou = 0.0;
};

// Injective predicted-id -> ground-truth-id map.
class AlignmentMap {
 public:
  // Returns false (and changes nothing) when either id is already matched.
  bool add(int pred_id, int gt_id, double iou);

  std::optional<int> gt_for(int pred_id) const;
  bool has_gt(int gt_id) const { return gt_taken_.contains(gt_id); }
  const std::map<int, MatchedPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }

 private:
  std::map<int, MatchedPair> pairs_;
  std::map<int, int> gt_taken_;
};

// Greedy matching: all same-class cross pairs with IoU strictly above 0.5, sorted by IoU
// descending then (pred id, gt id) ascending; a pair is accepted when both
// ends are still free.
AlignmentMap align_objects(std::span<const DetectedObject> pred,
                           std::span<const DetectedObject> gt);

}  // namespace rxnkit::metrics
