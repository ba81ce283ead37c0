#include "rxnkit/cli/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rxnkit/assembler/assembler.hpp"
#include "rxnkit/assembler/export.hpp"
#include "rxnkit/cli/io.hpp"
#include "rxnkit/cli/selfcheck.hpp"
#include "rxnkit/core/errors.hpp"
#include "rxnkit/grammar/condition_sequence.hpp"
#include "rxnkit/grammar/reaction_sequence.hpp"
#include "rxnkit/metrics/report_json.hpp"
#include "rxnkit/metrics/scoring.hpp"
#include "rxnkit/perturb/apply.hpp"
#include "rxnkit/perturb/expected.hpp"
#include "rxnkit/perturb/plan.hpp"
#include "rxnkit/synthgen/dataset.hpp"
#include "rxnkit/synthgen/records.hpp"

namespace rxnkit::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool verbose = false;

  // generate
  std::string records;
  int pool_size = 200;
  int count = 100;
  std::string out;
  std::vector<double> weights;
  std::vector<double> ratios;
  std::vector<int> font_px;
  std::vector<int> line_width_px;
  std::vector<double> molecule_scale;
  std::vector<int> canvas;
  std::optional<int> padding;
  unsigned threads = 0;

  // shared inputs
  std::string input = "-";
  std::string manifest;
  std::string pred;
  std::string gt;
  bool raw = false;

  // evaluate
  std::string mode = "both";
  bool per_pattern = false;

  // perturb
  std::string plan;
  std::string conditions_out;
  std::string expected_out;

  // assemble
  std::string conditions;

  // selfcheck
  int images = 100;
  int plans = 20;
};

// Tracks which input the current step reads, for error messages.
struct Context {
  std::string source;
};

void log(const Options& o, std::ostream& err, const std::string& line) {
  if (o.verbose) err << "rxnkit: " << line << '\n';
}

std::string source_name(const std::string& path) { return path == "-" ? "<stdin>" : path; }

void emit(std::ostream& out, const Json& j) { out << dump_json(j); }

std::map<std::string, metrics::PredictedImage> load_predictions(const std::string& path,
                                                                std::istream& in) {
  std::map<std::string, metrics::PredictedImage> out;
  for (ImageAnnotation& a : load_annotations(path, in)) {
    if (out.count(a.image_id)) {
      throw Error(ErrorCode::InvalidArgument, "duplicate prediction for image '" + a.image_id + "'");
    }
    out.emplace(a.image_id, metrics::as_prediction(a));
  }
  return out;
}

std::vector<metrics::ConditionPrediction> load_condition_predictions(const std::string& path,
                                                                     std::istream& in) {
  return metrics::condition_predictions_from_json(parse_json_text(read_text(path, in), source_name(path)));
}

template <typename T>
std::pair<T, T> pair_of(const std::vector<T>& v, const char* flag) {
  if (v.size() != 2) {
    throw CLI::ValidationError(flag, "expects two comma-separated values");
  }
  return {v[0], v[1]};
}

synthgen::GenConfig gen_config(const Options& o) {
  synthgen::GenConfig config;
  config.count = o.count;
  config.master_seed = o.seed;
  config.threads = o.threads;
  if (!o.weights.empty()) {
    if (o.weights.size() != kAllPatterns.size()) {
      throw CLI::ValidationError("--weights", "expects four values (single-line, multiple-line, branch, cycle)");
    }
    for (std::size_t i = 0; i < kAllPatterns.size(); ++i) config.pattern_weights[kAllPatterns[i]] = o.weights[i];
  }
  if (!o.ratios.empty()) {
    if (o.ratios.size() != 3) throw CLI::ValidationError("--ratios", "expects three values");
    config.split_ratios = {o.ratios[0], o.ratios[1], o.ratios[2]};
  }
  if (!o.font_px.empty()) {
    auto [lo, hi] = pair_of(o.font_px, "--font-px");
    config.style.font_size_px = {lo, hi};
  }
  if (!o.line_width_px.empty()) {
    auto [lo, hi] = pair_of(o.line_width_px, "--line-width");
    config.style.line_width_px = {lo, hi};
  }
  if (!o.molecule_scale.empty()) {
    auto [lo, hi] = pair_of(o.molecule_scale, "--molecule-scale");
    config.style.molecule_scale = {lo, hi};
  }
  if (!o.canvas.empty()) {
    auto [w, h] = pair_of(o.canvas, "--canvas");
    config.style.canvas_width_px = w;
    config.style.canvas_height_px = h;
  }
  if (o.padding) config.style.padding_px = *o.padding;
  return config;
}

int cmd_generate(const Options& o, Context& ctx, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  synthgen::GenConfig config = gen_config(o);
  config.validate();
  std::vector<ReactionRecord> pool;
  if (o.records.empty()) {
    pool = synthgen::sample_records(static_cast<std::size_t>(o.pool_size), o.seed);
    log(o, err, "using " + std::to_string(pool.size()) + " built-in sample records");
  } else {
    ctx.source = source_name(o.records);
    std::istringstream text(read_text(o.records, in));
    pool = synthgen::read_records_jsonl(text, ctx.source);
    log(o, err, "read " + std::to_string(pool.size()) + " records from " + ctx.source);
  }
  const std::string dir = o.out.empty() ? default_out_dir() : o.out;
  ctx.source = dir;
  synthgen::Manifest manifest = synthgen::generate_dataset(pool, config, dir);

  std::map<Pattern, std::size_t> counts;
  for (const auto& e : manifest) ++counts[e.pattern];
  Json patterns = Json::object();
  for (Pattern p : kAllPatterns) patterns[std::string(to_string(p))] = counts[p];
  Json j = Json::object();
  j["out_dir"] = dir;
  j["count"] = manifest.size();
  j["seed"] = o.seed;
  j["patterns"] = std::move(patterns);
  emit(out, j);
  return kExitOk;
}

int cmd_split(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.manifest);
  synthgen::Manifest manifest =
      synthgen::manifest_from_json(parse_json_text(read_text(o.manifest, in), ctx.source));
  std::array<double, 3> ratios = {0.8, 0.1, 0.1};
  if (!o.ratios.empty()) {
    if (o.ratios.size() != 3) throw CLI::ValidationError("--ratios", "expects three values");
    ratios = {o.ratios[0], o.ratios[1], o.ratios[2]};
  }
  auto parts = synthgen::split_dataset(manifest, ratios, o.seed);
  fs::path dir = !o.out.empty() ? fs::path(o.out)
                 : o.manifest == "-" ? fs::path(".")
                                     : fs::path(o.manifest).parent_path();
  const char* names[3] = {"train.json", "val.json", "test.json"};
  Json j = Json::object();
  for (std::size_t i = 0; i < 3; ++i) {
    fs::path path = dir / names[i];
    ctx.source = path.string();
    write_text(path, dump_json(synthgen::manifest_to_json(parts[i])));
    Json part = Json::object();
    part["path"] = path.string();
    part["count"] = parts[i].size();
    j[std::string(names[i]).substr(0, std::string(names[i]).find('.'))] = std::move(part);
  }
  emit(out, j);
  return kExitOk;
}

int cmd_emit_seq(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.input);
  Json arr = Json::array();
  for (const ImageAnnotation& a : load_annotations(o.input, in)) {
    std::string seq = grammar::emit_reaction_sequence(a.objects, a.reactions);
    if (o.raw) {
      out << seq << '\n';
      continue;
    }
    Json j = Json::object();
    j["image_id"] = a.image_id;
    j["sequence"] = seq;
    arr.push_back(std::move(j));
  }
  if (!o.raw) emit(out, arr);
  return kExitOk;
}

int cmd_parse_seq(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.input);
  grammar::ParsedReactions parsed = grammar::parse_reaction_sequence(read_text(o.input, in));
  ImageAnnotation a;
  a.objects = std::move(parsed.objects);
  a.reactions = std::move(parsed.reactions);
  Json full = annotation_to_json(a, false);
  Json j = Json::object();
  j["objects"] = full["objects"];
  j["reactions"] = full["reactions"];
  emit(out, j);
  return kExitOk;
}

int cmd_emit_cond(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.input);
  Json arr = Json::array();
  for (const ImageAnnotation& a : load_annotations(o.input, in)) {
    for (const auto& [id, words] : a.condition_texts) {
      std::string seq = grammar::emit_condition_sequence(words);
      if (o.raw) {
        out << seq << '\n';
        continue;
      }
      Json j = Json::object();
      j["image_id"] = a.image_id;
      j["object_id"] = id;
      j["sequence"] = seq;
      arr.push_back(std::move(j));
    }
  }
  if (!o.raw) emit(out, arr);
  return kExitOk;
}

int cmd_parse_cond(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.input);
  std::vector<ConditionWord> words = grammar::parse_condition_sequence(read_text(o.input, in));
  Json j = Json::object();
  j["words"] = words_to_json(words);
  emit(out, j);
  return kExitOk;
}

int cmd_evaluate(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.gt);
  auto gts = index_by_id(load_annotations(o.gt, in));
  ctx.source = source_name(o.pred);
  auto preds = load_predictions(o.pred, in);
  ctx.source = source_name(o.pred);
  metrics::MatchMode mode = *metrics::match_mode_from_string(o.mode);
  Json j = metrics::evaluation_report_to_json(metrics::score_images(preds, gts, mode));
  if (!o.per_pattern) j.erase("per_pattern");
  emit(out, j);
  return kExitOk;
}

int cmd_cri_eval(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.gt);
  auto gts = index_by_id(load_annotations(o.gt, in));
  ctx.source = source_name(o.pred);
  auto preds = load_condition_predictions(o.pred, in);
  emit(out, metrics::cri_report_to_json(metrics::cri_evaluate_corpus(preds, gts)));
  return kExitOk;
}

int cmd_perturb(const Options& o, Context& ctx, std::istream& in, std::ostream& out,
                std::ostream& err) {
  ctx.source = source_name(o.plan);
  perturb::PerturbationPlan plan =
      perturb::plan_from_json(parse_json_text(read_text(o.plan, in), ctx.source));
  ctx.source = source_name(o.gt);
  auto gts = index_by_id(load_annotations(o.gt, in));
  ctx.source = source_name(o.plan);
  perturb::Corpus predictions = perturb::apply_plan(plan, gts);

  Json preds = Json::array();
  std::vector<metrics::ConditionPrediction> conditions;
  for (const auto& [id, a] : predictions) {
    preds.push_back(annotation_to_json(a, false));
    for (const auto& [obj, words] : a.condition_texts) conditions.push_back({id, obj, words});
  }
  if (!o.conditions_out.empty()) {
    ctx.source = o.conditions_out;
    write_text(o.conditions_out, dump_json(metrics::condition_predictions_to_json(conditions)));
    log(o, err, "wrote " + std::to_string(conditions.size()) + " condition predictions");
  }
  if (!o.expected_out.empty()) {
    ctx.source = source_name(o.plan);
    Json expected = metrics::evaluation_report_to_json(perturb::expected_report(plan, gts));
    ctx.source = o.expected_out;
    write_text(o.expected_out, dump_json(expected));
  }
  if (o.out.empty() || o.out == "-") {
    emit(out, preds);
  } else {
    ctx.source = o.out;
    write_text(o.out, dump_json(preds));
    Json j = Json::object();
    j["predictions"] = o.out;
    j["image_count"] = predictions.size();
    emit(out, j);
  }
  return kExitOk;
}

int cmd_assemble(const Options& o, Context& ctx, std::istream& in, std::ostream& out) {
  ctx.source = source_name(o.input);
  std::vector<ImageAnnotation> annotations = load_annotations(o.input, in);
  std::map<std::string, std::map<int, std::vector<ConditionWord>>> overrides;
  if (!o.conditions.empty()) {
    ctx.source = source_name(o.conditions);
    for (auto& p : load_condition_predictions(o.conditions, in)) {
      overrides[p.image_id][p.object_id] = std::move(p.words);
    }
  }
  ctx.source = source_name(o.input);
  Json arr = Json::array();
  for (const ImageAnnotation& a : annotations) {
    std::map<int, std::vector<ConditionWord>> words = a.condition_texts;
    if (auto it = overrides.find(a.image_id); it != overrides.end()) {
      for (const auto& [id, w] : it->second) words[id] = w;
    }
    Json j = Json::object();
    j["image_id"] = a.image_id;
    j["reactions"] = assembler::export_json(assembler::assemble(a, words, a.smiles));
    arr.push_back(std::move(j));
  }
  emit(out, arr);
  return kExitOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  std::vector<Check> checks = run_selfcheck({o.seed, o.images, o.plans});
  Json j = checks_to_json(checks);
  emit(out, j);
  return j["passed"].get<bool>() ? kExitOk : kExitData;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Synthetic reaction-scheme data, sequence grammars and evaluation", "rxnkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "Seed for every stochastic step")->capture_default_str();
  app.add_flag("-v,--verbose", o.verbose, "Log progress to stderr");

  auto* generate = app.add_subcommand("generate", "Render a synthetic dataset from reaction records");
  generate->add_option("--records", o.records, "JSONL reaction records (default: built-in samples)");
  generate->add_option("--pool-size", o.pool_size, "Built-in sample pool size")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  generate->add_option("--count", o.count, "Number of images")->check(CLI::PositiveNumber)->capture_default_str();
  generate->add_option("--out", o.out, "Output directory (default: $RXNKIT_OUT_DIR or rxnkit_out)");
  generate->add_option("--weights", o.weights, "Pattern weights: single,multiple,branch,cycle")->delimiter(',');
  generate->add_option("--ratios", o.ratios, "Split ratios: train,val,test")->delimiter(',');
  generate->add_option("--font-px", o.font_px, "Font size range lo,hi")->delimiter(',');
  generate->add_option("--line-width", o.line_width_px, "Line width range lo,hi")->delimiter(',');
  generate->add_option("--molecule-scale", o.molecule_scale, "Molecule scale range lo,hi")->delimiter(',');
  generate->add_option("--canvas", o.canvas, "Canvas size width,height")->delimiter(',');
  generate->add_option("--padding", o.padding, "Canvas padding in pixels");
  generate->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();

  auto* split = app.add_subcommand("split", "Partition a manifest into train/val/test");
  split->add_option("--manifest", o.manifest, "Manifest JSON")->required();
  split->add_option("--ratios", o.ratios, "Split ratios: train,val,test")->delimiter(',');
  split->add_option("--out", o.out, "Output directory (default: the manifest's directory)");

  auto* emit_seq = app.add_subcommand("emit-seq", "Annotation JSON to reaction sequence");
  emit_seq->add_option("--input", o.input, "Annotation, annotation array or manifest ('-' = stdin)")
      ->capture_default_str();
  emit_seq->add_flag("--raw", o.raw, "Print bare sequences, one per line");

  auto* parse_seq = app.add_subcommand("parse-seq", "Reaction sequence to objects and reactions");
  parse_seq->add_option("--input", o.input, "Sequence text ('-' = stdin)")->capture_default_str();

  auto* emit_cond = app.add_subcommand("emit-cond", "Condition words to condition sequences");
  emit_cond->add_option("--input", o.input, "Annotation, annotation array or manifest ('-' = stdin)")
      ->capture_default_str();
  emit_cond->add_flag("--raw", o.raw, "Print bare sequences, one per line");

  auto* parse_cond = app.add_subcommand("parse-cond", "Condition sequence to role-labelled words");
  parse_cond->add_option("--input", o.input, "Sequence text ('-' = stdin)")->capture_default_str();

  auto* evaluate = app.add_subcommand("evaluate", "Score predicted reactions against ground truth");
  evaluate->add_option("--pred", o.pred, "Predictions (annotation array or manifest)")->required();
  evaluate->add_option("--gt", o.gt, "Ground truth (annotation array or manifest)")->required();
  evaluate->add_option("--mode", o.mode, "hard, soft or both")
      ->check(CLI::IsMember({"hard", "soft", "both"}))
      ->capture_default_str();
  evaluate->add_flag("--per-pattern", o.per_pattern, "Add a per-pattern breakdown");

  auto* cri = app.add_subcommand("cri-eval", "Score condition OCR and role identification");
  cri->add_option("--pred", o.pred, "Condition predictions JSON")->required();
  cri->add_option("--gt", o.gt, "Ground truth (annotation array or manifest)")->required();

  auto* perturb_cmd = app.add_subcommand("perturb", "Apply a perturbation plan to ground truth");
  perturb_cmd->add_option("--plan", o.plan, "Plan JSON")->required();
  perturb_cmd->add_option("--gt", o.gt, "Ground truth (annotation array or manifest)")->required();
  perturb_cmd->add_option("--out", o.out, "Prediction file (default: stdout)");
  perturb_cmd->add_option("--conditions-out", o.conditions_out, "Write condition predictions here");
  perturb_cmd->add_option("--expected-out", o.expected_out, "Write the closed-form report here");

  auto* assemble = app.add_subcommand("assemble", "Combine reactions, SMILES and condition words");
  assemble->add_option("--input", o.input, "Annotation, annotation array or manifest ('-' = stdin)")
      ->capture_default_str();
  assemble->add_option("--conditions", o.conditions, "Condition predictions overriding the annotation's words");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the metric oracle-agreement checks");
  selfcheck->add_option("--images", o.images, "Corpus size")->check(CLI::PositiveNumber)->capture_default_str();
  selfcheck->add_option("--plans", o.plans, "Random analytic plans")->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "generate") return cmd_generate(o, ctx, in, out, err);
    if (name == "split") return cmd_split(o, ctx, in, out);
    if (name == "emit-seq") return cmd_emit_seq(o, ctx, in, out);
    if (name == "parse-seq") return cmd_parse_seq(o, ctx, in, out);
    if (name == "emit-cond") return cmd_emit_cond(o, ctx, in, out);
    if (name == "parse-cond") return cmd_parse_cond(o, ctx, in, out);
    if (name == "evaluate") return cmd_evaluate(o, ctx, in, out);
    if (name == "cri-eval") return cmd_cri_eval(o, ctx, in, out);
    if (name == "perturb") return cmd_perturb(o, ctx, in, out, err);
    if (name == "assemble") return cmd_assemble(o, ctx, in, out);
    if (name == "selfcheck") return cmd_selfcheck(o, out);
  } catch (const CLI::ValidationError& e) {
    err << "rxnkit " << name << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "rxnkit " << name << ": " << to_string(e.code()) << " error";
    if (!ctx.source.empty()) err << " in " << ctx.source;
    err << ": " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "rxnkit " << name << ": error";
    if (!ctx.source.empty()) err << " in " << ctx.source;
    err << ": " << e.what() << '\n';
    return kExitData;
  }
  err << "rxnkit: unknown subcommand " << name << '\n';
  return kExitUsage;
}

}  // namespace rxnkit::cli
