#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rxnkit/core/types.hpp"
#include "rxnkit/metrics/scoring.hpp"

namespace rxnkit::metrics {

// A ground-truth word takes part in role scoring only when its aligned
// prediction reads above this accuracy.
inline constexpr double kOcrInclusionThreshold = 0.8;

struct WordAlignment {
  std::size_t gt_index = 0;
  std::optional<std::size_t> pred_index;
  double ocr = 0.0;
  bool included = false;
};

// Monotone alignment maximizing the summed per-word OCR accuracy. One entry
// per ground-truth word, in order.
std::vector<WordAlignment> align_words(std::span<const ConditionWord> pred,
                                       std::span<const ConditionWord> gt);

struct CriReport {
  double ocr_accuracy = 1.0;
  double cri_accuracy = 1.0;
  std::map<ConditionRole, ScoreTriple> per_role;
  // Rows: ground-truth role, columns: predicted role, in kAllRoles order.
  std::array<std::array<std::size_t, 5>, 5> confusion{};
  std::size_t included_word_count = 0;
  std::size_t excluded_word_count = 0;

  // Raw sums behind the ratios, kept so reports can be merged.
  double ocr_weighted_sum = 0.0;
  std::size_t gt_char_count = 0;

  std::size_t correct_role_count() const;
  CriReport& operator+=(const CriReport& o);
  // Recomputes the ratio fields from the counts; empty denominators give 1.0.
  void finalize();
};

std::size_t role_index(ConditionRole role);

CriReport cri_evaluate(std::span<const ConditionWord> pred, std::span<const ConditionWord> gt);

// Condition-interpretation output for one text object.
struct ConditionPrediction {
  std::string image_id;
  int object_id = 0;
  std::vector<ConditionWord> words;
};

// Every ground-truth text object is scored; objects without a prediction are
// scored against an empty word list. Throws Error(UnknownImage) for
// predictions naming an image or text object absent from gts, and
// Error(InvalidArgument) for duplicate predictions.
CriReport cri_evaluate_corpus(std::span<const ConditionPrediction> preds,
                              const std::map<std::string, ImageAnnotation>& gts);

}  // namespace rxnkit::metrics
