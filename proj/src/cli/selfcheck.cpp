#include "rxnkit/cli/selfcheck.hpp"

#include <map>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/grammar/condition_sequence.hpp"
#include "rxnkit/grammar/reaction_sequence.hpp"
#include "rxnkit/metrics/scoring.hpp"
#include "rxnkit/perturb/apply.hpp"
#include "rxnkit/perturb/expected.hpp"
#include "rxnkit/synthgen/dataset.hpp"
#include "rxnkit/synthgen/records.hpp"

namespace rxnkit::cli {

namespace {

using Corpus = std::map<std::string, ImageAnnotation>;

std::map<std::string, metrics::PredictedImage> as_predictions(const Corpus& corpus) {
  std::map<std::string, metrics::PredictedImage> out;
  for (const auto& [id, a] : corpus) out.emplace(id, metrics::as_prediction(a));
  return out;
}

Check identity_check(const Corpus& gts) {
  metrics::EvaluationReport r = metrics::score_images(as_predictions(gts), gts);
  auto ones = [](const metrics::ScoreTriple& s) {
    return s.precision == 1.0 && s.recall == 1.0 && s.f1 == 1.0;
  };
  Check c{"identity", ones(r.hard) && ones(r.soft), ""};
  if (!c.passed) c.detail = "ground truth scored against itself is not perfect";
  return c;
}

Check round_trip_check(const Corpus& gts) {
  Check c{"grammar-round-trip", true, ""};
  for (const auto& [id, a] : gts) {
    std::string seq = grammar::emit_reaction_sequence(a.objects, a.reactions);
    grammar::ParsedReactions parsed = grammar::parse_reaction_sequence(seq);
    if (grammar::emit_reaction_sequence(parsed.objects, parsed.reactions) != seq) {
      c.passed = false;
      c.detail = "reaction sequence of " + id + " changed after parse";
      return c;
    }
    for (const auto& [obj, words] : a.condition_texts) {
      if (grammar::parse_condition_sequence(grammar::emit_condition_sequence(words)) != words) {
        c.passed = false;
        c.detail = "condition sequence of " + id + " object " + std::to_string(obj) +
                   " changed after parse";
        return c;
      }
    }
  }
  return c;
}

Check oracle_check(const Corpus& gts, const SelfcheckOptions& options) {
  Check c{"oracle-agreement", true, ""};
  Rng rng(mix_seed(options.seed, 0x5e1fc4ec));
  int ordering_failures = 0;
  for (int i = 0; i < options.plans; ++i) {
    perturb::PerturbationPlan plan = perturb::random_analytic_plan(gts, rng);
    metrics::EvaluationReport expected = perturb::expected_report(plan, gts);
    metrics::EvaluationReport actual =
        metrics::score_images(as_predictions(perturb::apply_plan(plan, gts)), gts);
    if (actual.hard.f1 > actual.soft.f1) ++ordering_failures;
    if (!metrics::reports_agree(actual, expected, 1e-12)) {
      c.passed = false;
      c.detail = "plan " + std::to_string(i) + " (" + dump_json(perturb::plan_to_json(plan)) +
                 ") disagrees with the closed form";
      return c;
    }
  }
  if (ordering_failures) {
    c.passed = false;
    c.detail = std::to_string(ordering_failures) + " plans scored hard above soft";
  }
  return c;
}

}  // namespace

std::vector<Check> run_selfcheck(const SelfcheckOptions& options) {
  if (options.images <= 0 || options.plans < 0) {
    throw Error(ErrorCode::InvalidArgument, "selfcheck needs a positive image count");
  }
  synthgen::GenConfig config;
  config.count = options.images;
  config.master_seed = options.seed;
  std::vector<ReactionRecord> pool = synthgen::sample_records(200, options.seed);
  Corpus gts;
  for (int i = 0; i < options.images; ++i) {
    synthgen::GeneratedImage img =
        synthgen::generate_image(pool, config, static_cast<std::size_t>(i));
    gts.emplace(img.image_id, std::move(img.annotation));
  }
  std::vector<Check> checks;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      checks.push_back(fn());
    } catch (const Error& e) {
      checks.push_back({name, false, e.what()});
    }
  };
  guarded("identity", [&] { return identity_check(gts); });
  guarded("grammar-round-trip", [&] { return round_trip_check(gts); });
  guarded("oracle-agreement", [&] { return oracle_check(gts, options); });
  return checks;
}

Json checks_to_json(const std::vector<Check>& checks) {
  Json arr = Json::array();
  bool all = true;
  for (const Check& c : checks) {
    Json j = Json::object();
    j["name"] = c.name;
    j["passed"] = c.passed;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
    all = all && c.passed;
  }
  Json out = Json::object();
  out["passed"] = all;
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace rxnkit::cli
