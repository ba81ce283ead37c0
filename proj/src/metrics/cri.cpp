#include "rxnkit/metrics/cri.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/metrics/ocr.hpp"

namespace rxnkit::metrics {

std::size_t role_index(ConditionRole role) {
  return static_cast<std::size_t>(std::find(kAllRoles.begin(), kAllRoles.end(), role) -
                                  kAllRoles.begin());
}

std::vector<WordAlignment> align_words(std::span<const ConditionWord> pred,
                                       std::span<const ConditionWord> gt) {
  const std::size_t n = gt.size();
  const std::size_t m = pred.size();
  std::vector<double> acc(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) acc[i * m + j] = ocr_accuracy(pred[j].text, gt[i].text);
  }
  // best[i][j]: best total over gt[0..i) and pred[0..j).
  std::vector<double> best((n + 1) * (m + 1), 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return best[i * (m + 1) + j]; };
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      at(i, j) = std::max({at(i - 1, j), at(i, j - 1), at(i - 1, j - 1) + acc[(i - 1) * m + j - 1]});
    }
  }
  std::vector<WordAlignment> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].gt_index = i;
  constexpr double eps = 1e-12;
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 && j > 0) {
    double a = acc[(i - 1) * m + j - 1];
    if (a > 0.0 && std::abs(at(i, j) - (at(i - 1, j - 1) + a)) <= eps) {
      out[i - 1].pred_index = j - 1;
      out[i - 1].ocr = a;
      out[i - 1].included = a > kOcrInclusionThreshold;
      --i;
      --j;
    } else if (std::abs(at(i, j) - at(i - 1, j)) <= eps) {
      --i;
    } else {
      --j;
    }
  }
  return out;
}

std::size_t CriReport::correct_role_count() const {
  std::size_t c = 0;
  for (std::size_t r = 0; r < 5; ++r) c += confusion[r][r];
  return c;
}

CriReport& CriReport::operator+=(const CriReport& o) {
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) confusion[r][c] += o.confusion[r][c];
  }
  included_word_count += o.included_word_count;
  excluded_word_count += o.excluded_word_count;
  ocr_weighted_sum += o.ocr_weighted_sum;
  gt_char_count += o.gt_char_count;
  finalize();
  return *this;
}

void CriReport::finalize() {
  ocr_accuracy = gt_char_count ? ocr_weighted_sum / static_cast<double>(gt_char_count) : 1.0;
  cri_accuracy = included_word_count ? static_cast<double>(correct_role_count()) /
                                           static_cast<double>(included_word_count)
                                     : 1.0;
  per_role.clear();
  for (std::size_t r = 0; r < 5; ++r) {
    std::size_t tp = confusion[r][r];
    std::size_t gt_total = 0;
    std::size_t pred_total = 0;
    for (std::size_t k = 0; k < 5; ++k) {
      gt_total += confusion[r][k];
      pred_total += confusion[k][r];
    }
    ScoreTriple s;
    s.precision = pred_total ? static_cast<double>(tp) / static_cast<double>(pred_total) : 1.0;
    s.recall = gt_total ? static_cast<double>(tp) / static_cast<double>(gt_total) : 1.0;
    s.f1 = f1_score(s.precision, s.recall);
    per_role[kAllRoles[r]] = s;
  }
}

CriReport cri_evaluate(std::span<const ConditionWord> pred, std::span<const ConditionWord> gt) {
  CriReport report;
  for (const WordAlignment& a : align_words(pred, gt)) {
    const ConditionWord& g = gt[a.gt_index];
    std::size_t len = ocr_length(g.text);
    report.gt_char_count += len;
    report.ocr_weighted_sum += a.ocr * static_cast<double>(len);
    if (a.included) {
      ++report.included_word_count;
      ++report.confusion[role_index(g.role)][role_index(pred[*a.pred_index].role)];
    } else {
      ++report.excluded_word_count;
    }
  }
  report.finalize();
  return report;
}

CriReport cri_evaluate_corpus(std::span<const ConditionPrediction> preds,
                              const std::map<std::string, ImageAnnotation>& gts) {
  std::map<std::pair<std::string, int>, const ConditionPrediction*> by_key;
  for (const ConditionPrediction& p : preds) {
    auto img = gts.find(p.image_id);
    if (img == gts.end()) {
      throw Error(ErrorCode::UnknownImage,
                  "condition prediction for unknown image '" + p.image_id + "'");
    }
    if (!img->second.condition_texts.contains(p.object_id)) {
      throw Error(ErrorCode::UnknownImage, "image '" + p.image_id + "' has no text object " +
                                               std::to_string(p.object_id));
    }
    if (!by_key.emplace(std::make_pair(p.image_id, p.object_id), &p).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate condition prediction for image '" +
                                                  p.image_id + "' object " +
                                                  std::to_string(p.object_id));
    }
  }
  CriReport total;
  for (const auto& [image_id, gt] : gts) {
    for (const auto& [object_id, words] : gt.condition_texts) {
      auto it = by_key.find({image_id, object_id});
      std::span<const ConditionWord> pred;
      if (it != by_key.end()) pred = it->second->words;
      total += cri_evaluate(pred, words);
    }
  }
  total.finalize();
  return total;
}

}  // namespace rxnkit::metrics
