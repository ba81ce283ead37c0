#pragma once

#include <map>
#include <string>
#include <vector>

#include "rxnkit/core/types.hpp"
#include "rxnkit/perturb/plan.hpp"

namespace rxnkit::perturb {

using Corpus = std::map<std::string, ImageAnnotation>;

// Where each predicted reaction came from: the index of its ground-truth
// reaction and the Str ids moved from conditions to reactants.
struct ReactionTrace {
  std::size_t source = 0;
  std::vector<int> moved_to_reactants;

  friend bool operator==(const ReactionTrace&, const ReactionTrace&) = default;
};

struct AppliedPlan {
  Corpus predictions;
  std::map<std::string, std::vector<ReactionTrace>> traces;
};

// Steps run in order over the whole corpus. Corpus-level selections draw from
// an rng derived from (seed, step index); per-image randomness from
// (seed, image id, step index). Throws Error(InapplicableStep) when a step
// cannot be carried out (too few reactions to drop or relabel, duplicate
// index out of range).
AppliedPlan apply_traced(const PerturbationPlan& plan, const Corpus& gts);

Corpus apply_plan(const PerturbationPlan& plan, const Corpus& gts);
ImageAnnotation apply_plan(const PerturbationPlan& plan, const ImageAnnotation& gt);

}  // namespace rxnkit::perturb
