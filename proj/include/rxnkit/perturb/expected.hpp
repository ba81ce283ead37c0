#pragma once

#include "rxnkit/metrics/scoring.hpp"
#include "rxnkit/perturb/apply.hpp"

namespace rxnkit::perturb {

// Largest jitter for which every perturbed box keeps IoU > 0.5 with its source.
inline constexpr double kMaxAnalyticJitter = 0.1;

// Scores that score_images(apply_plan(plan, gts), gts) must produce, derived
// from the reaction traces and role sets alone (no geometry, no metrics code).
// Throws Error(NotAnalytic) for text corruption, jitter above 0.1, or jitter
// on images whose ground-truth boxes overlap too much for the identity
// alignment to be guaranteed.
metrics::EvaluationReport expected_report(const PerturbationPlan& plan, const Corpus& gts);

}  // namespace rxnkit::perturb
