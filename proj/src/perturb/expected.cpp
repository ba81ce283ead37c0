#include "rxnkit/perturb/expected.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::perturb {

namespace {

// Distinct ground-truth boxes may share at most this fraction of the smaller
// box. Together with the jitter bound this keeps every cross-object IoU below
// 0.5 while each object's own IoU stays above 0.68.
constexpr double kMaxSharedFraction = 0.05;

long long overlap_area(const BBox& a, const BBox& b) {
  long long w = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  long long h = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  return w > 0 && h > 0 ? w * h : 0;
}

void check_analytic(const PerturbationPlan& plan, const Corpus& gts) {
  bool jittered = false;
  for (const Step& s : plan.steps) {
    if (std::holds_alternative<CorruptText>(s)) {
      throw Error(ErrorCode::NotAnalytic, "text corruption has no closed-form effect");
    }
    if (const auto* j = std::get_if<JitterBoxes>(&s)) {
      if (j->max_shift_fraction > kMaxAnalyticJitter) {
        throw Error(ErrorCode::NotAnalytic, "jitter above 0.1 may break the alignment");
      }
      jittered = jittered || j->max_shift_fraction > 0.0;
    }
  }
  if (!jittered) return;
  for (const auto& [id, img] : gts) {
    for (std::size_t i = 0; i < img.objects.size(); ++i) {
      for (std::size_t j = i + 1; j < img.objects.size(); ++j) {
        const BBox& a = img.objects[i].bbox;
        const BBox& b = img.objects[j].bbox;
        if (overlap_area(a, b) > kMaxSharedFraction * std::min(a.area(), b.area())) {
          throw Error(ErrorCode::NotAnalytic,
                      "image '" + id + "' has overlapping objects " +
                          std::to_string(img.objects[i].id) + " and " +
                          std::to_string(img.objects[j].id) + "; jitter could swap them");
        }
      }
    }
  }
}

using IdSet = std::set<int>;
using HardKey = std::tuple<IdSet, IdSet, IdSet>;
using SoftKey = std::pair<IdSet, IdSet>;

HardKey hard_key(const ReactionAnnotation& r, const std::vector<int>& moved) {
  IdSet reactants(r.reactants.begin(), r.reactants.end());
  IdSet conditions(r.conditions.begin(), r.conditions.end());
  for (int id : moved) {
    reactants.insert(id);
    conditions.erase(id);
  }
  return {reactants, conditions, IdSet(r.products.begin(), r.products.end())};
}

// Relabeling only moves structures between the two pooled roles, so the soft
// key of a prediction is that of its source.
SoftKey soft_key(const ImageAnnotation& img, const ReactionAnnotation& r) {
  auto structures = [&](std::initializer_list<const std::vector<int>*> lists) {
    IdSet out;
    for (const auto* list : lists) {
      for (int id : *list) {
        const DetectedObject* o = img.find_object(id);
        if (o && o->cls == ObjectClass::Str) out.insert(id);
      }
    }
    return out;
  };
  return {structures({&r.reactants, &r.conditions}), structures({&r.products})};
}

template <class Key>
metrics::MatchCounts tally(const std::vector<Key>& pred, const std::vector<Key>& gt) {
  metrics::MatchCounts c;
  c.predictions = pred.size();
  c.ground_truth = gt.size();
  for (const Key& k : pred) {
    if (std::find(gt.begin(), gt.end(), k) != gt.end()) ++c.matched_predictions;
  }
  for (const Key& k : gt) {
    if (std::find(pred.begin(), pred.end(), k) != pred.end()) ++c.matched_ground_truth;
  }
  return c;
}

}  // namespace

metrics::EvaluationReport expected_report(const PerturbationPlan& plan, const Corpus& gts) {
  check_analytic(plan, gts);
  AppliedPlan applied = apply_traced(plan, gts);

  metrics::EvaluationReport report;
  report.mode = metrics::MatchMode::Both;
  for (const auto& [id, gt] : gts) {
    std::vector<HardKey> gt_hard;
    std::vector<SoftKey> gt_soft;
    for (const ReactionAnnotation& r : gt.reactions) {
      gt_hard.push_back(hard_key(r, {}));
      gt_soft.push_back(soft_key(gt, r));
    }
    std::vector<HardKey> pred_hard;
    std::vector<SoftKey> pred_soft;
    for (const ReactionTrace& t : applied.traces.at(id)) {
      pred_hard.push_back(hard_key(gt.reactions[t.source], t.moved_to_reactants));
      pred_soft.push_back(gt_soft[t.source]);
    }
    metrics::MatchCounts hard = tally(pred_hard, gt_hard);
    metrics::MatchCounts soft = tally(pred_soft, gt_soft);
    ++report.image_count;
    report.hard_counts += hard;
    report.soft_counts += soft;
    metrics::PatternScores& p = report.per_pattern[gt.pattern];
    ++p.image_count;
    p.hard += hard;
    p.soft += soft;
  }
  report.hard = report.hard_counts.score();
  report.soft = report.soft_counts.score();
  return report;
}

}  // namespace rxnkit::perturb
