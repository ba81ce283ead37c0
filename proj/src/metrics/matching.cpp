#include "rxnkit/metrics/matching.hpp"

#include <set>
#include <vector>

namespace rxnkit::metrics {

namespace {

// Aligned gt ids of the pred list; nullopt if any id is unaligned.
std::optional<std::set<int>> mapped(const std::vector<int>& pred_ids, const AlignmentMap& align) {
  std::set<int> out;
  for (int id : pred_ids) {
    auto gt = align.gt_for(id);
    if (!gt) return std::nullopt;
    out.insert(*gt);
  }
  return out;
}

bool same(const std::vector<int>& pred_ids, const std::vector<int>& gt_ids,
          const AlignmentMap& align) {
  auto m = mapped(pred_ids, align);
  return m && *m == std::set<int>(gt_ids.begin(), gt_ids.end());
}

bool is_structure(int id, std::span<const DetectedObject> objects) {
  for (const DetectedObject& o : objects) {
    if (o.id == id) return o.cls == ObjectClass::Str;
  }
  return false;
}

std::vector<int> structures(std::span<const DetectedObject> objects,
                            std::initializer_list<const std::vector<int>*> lists) {
  std::vector<int> out;
  for (const auto* list : lists) {
    for (int id : *list) {
      if (is_structure(id, objects)) out.push_back(id);
    }
  }
  return out;
}

}  // namespace

bool hard_match(const ReactionAnnotation& pred, const ReactionAnnotation& gt,
                const AlignmentMap& align) {
  return same(pred.reactants, gt.reactants, align) &&
         same(pred.conditions, gt.conditions, align) && same(pred.products, gt.products, align);
}

bool soft_match(const ReactionAnnotation& pred, const ReactionAnnotation& gt,
                const AlignmentMap& align, std::span<const DetectedObject> pred_objects,
                std::span<const DetectedObject> gt_objects) {
  return same(structures(pred_objects, {&pred.reactants, &pred.conditions}),
              structures(gt_objects, {&gt.reactants, &gt.conditions}), align) &&
         same(structures(pred_objects, {&pred.products}), structures(gt_objects, {&gt.products}),
              align);
}

}  // namespace rxnkit::metrics
