#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <map>
#include <string>

#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/core/rng.hpp"

namespace rxnkit::perturb {

// Translates every box by at most floor(fraction * extent) bins per axis.
struct JitterBoxes {
  double max_shift_fraction = 0.0;
};
// Removes `count` reactions chosen across the whole corpus.
struct DropReactions {
  int count = 0;
};
// Appends a copy of reaction `index` in every image.
struct DuplicateReaction {
  int index = 0;
};
// In `count` reactions chosen across the corpus, moves the lowest-id Str
// condition object into the reactant list.
struct RelabelConditionAsReactant {
  int count = 0;
};
// Substitutes each code point of every condition word with this probability.
struct CorruptText {
  double char_error_rate = 0.0;
};

using Step =
    std::variant<JitterBoxes, DropReactions, DuplicateReaction, RelabelConditionAsReactant,
                 CorruptText>;

struct PerturbationPlan {
  std::uint64_t seed = 0;
  std::vector<Step> steps;

  // Throws Error(InvalidArgument) for fractions outside [0,1) or negative counts.
  void validate() const;
};

std::string_view step_name(const Step& step);

Json plan_to_json(const PerturbationPlan& plan);
// {"seed": n, "steps": [{"op": "jitter_boxes", "max_shift_fraction": f}, ...]}
PerturbationPlan plan_from_json(const Json& j);

// Random plan made only of steps with a closed-form effect (jitter up to 0.1,
// duplicate, relabel, drop), sized so every step applies to `gts`.
PerturbationPlan random_analytic_plan(const std::map<std::string, ImageAnnotation>& gts,
                                      Rng& rng);

}  // namespace rxnkit::perturb
