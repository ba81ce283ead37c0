#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rxnkit/core/types.hpp"

namespace rxnkit::metrics {

struct ScoreTriple {
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
};

// f1 = 2PR / (P + R), or 0 when P + R = 0.
double f1_score(double precision, double recall);

// Numerators and denominators of the precision and recall sums.
struct MatchCounts {
  std::size_t matched_predictions = 0;
  std::size_t predictions = 0;
  std::size_t matched_ground_truth = 0;
  std::size_t ground_truth = 0;

  MatchCounts& operator+=(const MatchCounts& o);
  // Micro-averaged scores; an empty denominator scores 1.0.
  ScoreTriple score() const;

  friend bool operator==(const MatchCounts&, const MatchCounts&) = default;
};

enum class MatchMode { Hard, Soft, Both };

std::string_view to_string(MatchMode mode);
std::optional<MatchMode> match_mode_from_string(std::string_view s);

struct PatternScores {
  std::size_t image_count = 0;
  MatchCounts hard;
  MatchCounts soft;
};

struct EvaluationReport {
  MatchMode mode = MatchMode::Both;
  std::size_t image_count = 0;
  MatchCounts hard_counts;
  MatchCounts soft_counts;
  ScoreTriple hard;
  ScoreTriple soft;
  std::map<Pattern, PatternScores> per_pattern;
};

struct PredictedImage {
  std::vector<DetectedObject> objects;
  std::vector<ReactionAnnotation> reactions;
};

// Per-image counts under both criteria, using the existence semantics: a
// prediction counts if it matches some ground-truth reaction, and vice versa.
struct ImageCounts {
  MatchCounts hard;
  MatchCounts soft;
};
ImageCounts count_image(const PredictedImage& pred, const ImageAnnotation& gt);

// Both criteria are always computed; `mode` is recorded for report output.
// Ground-truth images without predictions count as empty predictions.
// Throws Error(UnknownImage) for a prediction whose id is not in gts.
EvaluationReport score_images(const std::map<std::string, PredictedImage>& preds,
                              const std::map<std::string, ImageAnnotation>& gts,
                              MatchMode mode = MatchMode::Both);

PredictedImage as_prediction(const ImageAnnotation& a);

// Same counts everywhere (overall and per pattern) and scores within `tolerance`.
bool reports_agree(const EvaluationReport& a, const EvaluationReport& b, double tolerance = 0.0);

}  // namespace rxnkit::metrics
