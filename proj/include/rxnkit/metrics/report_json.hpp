#pragma once

#include <vector>

#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/metrics/cri.hpp"
#include "rxnkit/metrics/scoring.hpp"

namespace rxnkit::metrics {

Json score_triple_to_json(const ScoreTriple& s);
Json match_counts_to_json(const MatchCounts& c);

// Hard and/or soft sections are written according to report.mode.
Json evaluation_report_to_json(const EvaluationReport& report);
Json cri_report_to_json(const CriReport& report);

// Array of {image_id, object_id, words: [{text, role}]}.
std::vector<ConditionPrediction> condition_predictions_from_json(const Json& j);
Json condition_predictions_to_json(std::span<const ConditionPrediction> preds);

}  // namespace rxnkit::metrics
