#include "rxnkit/metrics/scoring.hpp"

#include <cmath>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/metrics/alignment.hpp"
#include "rxnkit/metrics/matching.hpp"

namespace rxnkit::metrics {

double f1_score(double precision, double recall) {
  double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

MatchCounts& MatchCounts::operator+=(const MatchCounts& o) {
  matched_predictions += o.matched_predictions;
  predictions += o.predictions;
  matched_ground_truth += o.matched_ground_truth;
  ground_truth += o.ground_truth;
  return *this;
}

ScoreTriple MatchCounts::score() const {
  ScoreTriple s;
  s.precision = predictions ? static_cast<double>(matched_predictions) / predictions : 1.0;
  s.recall = ground_truth ? static_cast<double>(matched_ground_truth) / ground_truth : 1.0;
  s.f1 = f1_score(s.precision, s.recall);
  return s;
}

std::string_view to_string(MatchMode mode) {
  switch (mode) {
    case MatchMode::Hard: return "hard";
    case MatchMode::Soft: return "soft";
    case MatchMode::Both: return "both";
  }
  return "?";
}

std::optional<MatchMode> match_mode_from_string(std::string_view s) {
  if (s == "hard") return MatchMode::Hard;
  if (s == "soft") return MatchMode::Soft;
  if (s == "both") return MatchMode::Both;
  return std::nullopt;
}

ImageCounts count_image(const PredictedImage& pred, const ImageAnnotation& gt) {
  AlignmentMap align = align_objects(pred.objects, gt.objects);
  const std::size_t m = pred.reactions.size();
  const std::size_t n = gt.reactions.size();
  std::vector<char> hard(m * n);
  std::vector<char> soft(m * n);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      hard[j * n + i] = hard_match(pred.reactions[j], gt.reactions[i], align);
      soft[j * n + i] =
          soft_match(pred.reactions[j], gt.reactions[i], align, pred.objects, gt.objects);
    }
  }
  auto tally = [&](const std::vector<char>& hit) {
    MatchCounts c;
    c.predictions = m;
    c.ground_truth = n;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (hit[j * n + i]) {
          ++c.matched_predictions;
          break;
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (hit[j * n + i]) {
          ++c.matched_ground_truth;
          break;
        }
      }
    }
    return c;
  };
  return {tally(hard), tally(soft)};
}

EvaluationReport score_images(const std::map<std::string, PredictedImage>& preds,
                              const std::map<std::string, ImageAnnotation>& gts, MatchMode mode) {
  for (const auto& [id, _] : preds) {
    if (!gts.contains(id)) {
      throw Error(ErrorCode::UnknownImage, "prediction for unknown image '" + id + "'");
    }
  }
  EvaluationReport report;
  report.mode = mode;
  const PredictedImage empty;
  for (const auto& [id, gt] : gts) {
    auto it = preds.find(id);
    ImageCounts c = count_image(it == preds.end() ? empty : it->second, gt);
    ++report.image_count;
    report.hard_counts += c.hard;
    report.soft_counts += c.soft;
    PatternScores& p = report.per_pattern[gt.pattern];
    ++p.image_count;
    p.hard += c.hard;
    p.soft += c.soft;
  }
  report.hard = report.hard_counts.score();
  report.soft = report.soft_counts.score();
  return report;
}

PredictedImage as_prediction(const ImageAnnotation& a) { return {a.objects, a.reactions}; }

namespace {

bool close(const ScoreTriple& a, const ScoreTriple& b, double tol) {
  return std::abs(a.precision - b.precision) <= tol && std::abs(a.recall - b.recall) <= tol &&
         std::abs(a.f1 - b.f1) <= tol;
}

}  // namespace

bool reports_agree(const EvaluationReport& a, const EvaluationReport& b, double tolerance) {
  if (a.image_count != b.image_count || !(a.hard_counts == b.hard_counts) ||
      !(a.soft_counts == b.soft_counts) || a.per_pattern.size() != b.per_pattern.size()) {
    return false;
  }
  if (!close(a.hard, b.hard, tolerance) || !close(a.soft, b.soft, tolerance)) return false;
  for (const auto& [pattern, pa] : a.per_pattern) {
    auto it = b.per_pattern.find(pattern);
    if (it == b.per_pattern.end() || pa.image_count != it->second.image_count ||
        !(pa.hard == it->second.hard) || !(pa.soft == it->second.soft)) {
      return false;
    }
  }
  return true;
}

}  // namespace rxnkit::metrics
