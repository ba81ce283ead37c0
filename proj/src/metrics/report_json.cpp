#include "rxnkit/metrics/report_json.hpp"

namespace rxnkit::metrics {

Json score_triple_to_json(const ScoreTriple& s) {
  Json j = Json::object();
  j["precision"] = s.precision;
  j["recall"] = s.recall;
  j["f1"] = s.f1;
  return j;
}

Json match_counts_to_json(const MatchCounts& c) {
  Json j = score_triple_to_json(c.score());
  j["matched_predictions"] = c.matched_predictions;
  j["predictions"] = c.predictions;
  j["matched_ground_truth"] = c.matched_ground_truth;
  j["ground_truth"] = c.ground_truth;
  return j;
}

Json evaluation_report_to_json(const EvaluationReport& report) {
  const bool hard = report.mode != MatchMode::Soft;
  const bool soft = report.mode != MatchMode::Hard;
  Json j = Json::object();
  j["mode"] = std::string(to_string(report.mode));
  j["image_count"] = report.image_count;
  j["gt_reactions"] = report.hard_counts.ground_truth;
  j["pred_reactions"] = report.hard_counts.predictions;
  if (hard) j["hard"] = match_counts_to_json(report.hard_counts);
  if (soft) j["soft"] = match_counts_to_json(report.soft_counts);
  Json per = Json::object();
  for (const auto& [pattern, scores] : report.per_pattern) {
    Json p = Json::object();
    p["image_count"] = scores.image_count;
    if (hard) p["hard"] = match_counts_to_json(scores.hard);
    if (soft) p["soft"] = match_counts_to_json(scores.soft);
    per[std::string(to_string(pattern))] = std::move(p);
  }
  j["per_pattern"] = std::move(per);
  return j;
}

Json cri_report_to_json(const CriReport& report) {
  Json j = Json::object();
  j["ocr_accuracy"] = report.ocr_accuracy;
  j["cri_accuracy"] = report.cri_accuracy;
  j["included_word_count"] = report.included_word_count;
  j["excluded_word_count"] = report.excluded_word_count;
  j["gt_char_count"] = report.gt_char_count;
  Json roles = Json::object();
  for (ConditionRole r : kAllRoles) {
    auto it = report.per_role.find(r);
    roles[std::string(to_string(r))] =
        score_triple_to_json(it == report.per_role.end() ? ScoreTriple{} : it->second);
  }
  j["per_role"] = std::move(roles);
  Json labels = Json::array();
  for (ConditionRole r : kAllRoles) labels.push_back(std::string(to_string(r)));
  Json confusion = Json::object();
  confusion["roles"] = std::move(labels);
  confusion["matrix"] = report.confusion;
  j["confusion"] = std::move(confusion);
  return j;
}

std::vector<ConditionPrediction> condition_predictions_from_json(const Json& j) {
  using namespace json_schema;
  if (!j.is_array()) fail("condition_predictions", "expected an array");
  std::vector<ConditionPrediction> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string path = "condition_predictions[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_object()) fail(path, "expected an object");
    ConditionPrediction p;
    p.image_id = as_string(member(e, "image_id", path), path + ".image_id");
    p.object_id = as_int(member(e, "object_id", path), path + ".object_id");
    p.words = words_from_json(member(e, "words", path), path + ".words");
    out.push_back(std::move(p));
  }
  return out;
}

Json condition_predictions_to_json(std::span<const ConditionPrediction> preds) {
  Json arr = Json::array();
  for (const ConditionPrediction& p : preds) {
    Json j = Json::object();
    j["image_id"] = p.image_id;
    j["object_id"] = p.object_id;
    j["words"] = words_to_json(p.words);
    arr.push_back(std::move(j));
  }
  return arr;
}

}  // namespace rxnkit::metrics
