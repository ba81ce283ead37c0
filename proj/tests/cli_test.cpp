#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "rxnkit/cli/cli.hpp"
#include "rxnkit/cli/io.hpp"
#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/grammar/condition_sequence.hpp"
#include "rxnkit/grammar/reaction_sequence.hpp"
#include "rxnkit/metrics/report_json.hpp"
#include "rxnkit/perturb/expected.hpp"
#include "rxnkit/perturb/plan.hpp"

namespace rxnkit::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& stdin_text = {}) {
  args.insert(args.begin(), "rxnkit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Result r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rxnkit_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(dir_ / name) << text;
    return path(name);
  }

  std::string write_corpus(const std::string& name, const testing::Corpus& c) const {
    Json arr = Json::array();
    for (const auto& [id, a] : c) arr.push_back(annotation_to_json(a));
    return write(name, dump_json(arr));
  }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitOne) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"no-such-command"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"evaluate", "--gt", "x.json"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"evaluate", "--pred", "a", "--gt", "b", "--mode", "fuzzy"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, DataErrorsExitTwo) {
  Result r = run_cli({"parse-seq"}, "[Rxn/st][Rct/st][1,2,3,4,[Str],0");
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;
  EXPECT_EQ(run_cli({"emit-seq", "--input", path("missing.json")}).code, kExitData);
  EXPECT_EQ(run_cli({"emit-seq"}, "{not json").code, kExitData);
}

TEST_F(CliTest, GenerateThenSplit) {
  std::string out = path("gen");
  Result r = run_cli({"--seed", "5", "generate", "--count", "12", "--out", out, "--threads", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["count"], 12);
  EXPECT_EQ(j["seed"], 5);
  int total = 0;
  for (auto& [k, v] : j["patterns"].items()) total += v.get<int>();
  EXPECT_EQ(total, 12);
  EXPECT_TRUE(fs::exists(fs::path(out) / "manifest.json"));
  EXPECT_TRUE(fs::exists(fs::path(out) / "img_0.svg"));

  std::istringstream none;
  auto anns = load_annotations((fs::path(out) / "manifest.json").string(), none);
  EXPECT_EQ(anns.size(), 12u);

  Result s = run_cli({"split", "--manifest", (fs::path(out) / "manifest.json").string(), "--ratios",
                      "0.5,0.25,0.25", "--out", path("parts")});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  Json sj = Json::parse(s.out);
  EXPECT_EQ(sj["train"]["count"], 6);
  EXPECT_EQ(sj["val"]["count"], 3);
  EXPECT_EQ(sj["test"]["count"], 3);
}

TEST_F(CliTest, SequencesMatchLibrary) {
  testing::Corpus c = testing::generate_corpus(5, 8);
  std::string gt = write_corpus("gt.json", c);
  Result r = run_cli({"emit-seq", "--input", gt});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json arr = Json::parse(r.out);
  ASSERT_EQ(arr.size(), c.size());
  for (const Json& e : arr) {
    const ImageAnnotation& a = c.at(e["image_id"].get<std::string>());
    std::string seq = e["sequence"];
    EXPECT_EQ(seq, grammar::emit_reaction_sequence(a.objects, a.reactions));
    Result p = run_cli({"parse-seq"}, seq);
    ASSERT_EQ(p.code, kExitOk) << p.err;
    Json pj = Json::parse(p.out);
    EXPECT_EQ(pj["reactions"].size(), a.reactions.size());
    EXPECT_EQ(pj["objects"].size(), a.objects.size());
  }
  Result raw = run_cli({"emit-seq", "--raw", "--input", gt});
  EXPECT_EQ(std::count(raw.out.begin(), raw.out.end(), '\n'), static_cast<long>(c.size()));

  Result cond = run_cli({"emit-cond", "--input", gt});
  ASSERT_EQ(cond.code, kExitOk) << cond.err;
  for (const Json& e : Json::parse(cond.out)) {
    const auto& words = c.at(e["image_id"].get<std::string>()).condition_texts.at(e["object_id"].get<int>());
    EXPECT_EQ(e["sequence"].get<std::string>(), grammar::emit_condition_sequence(words));
    Result pc = run_cli({"parse-cond"}, e["sequence"].get<std::string>());
    ASSERT_EQ(pc.code, kExitOk) << pc.err;
    EXPECT_EQ(words_from_json(Json::parse(pc.out)["words"]), words);
  }
}

TEST_F(CliTest, PerturbEvaluateAgreesWithOracle) {
  testing::Corpus c = testing::generate_corpus(20, 9);
  std::string gt = write_corpus("gt.json", c);
  perturb::PerturbationPlan plan{4, {perturb::DropReactions{3}, perturb::DuplicateReaction{0}}};
  std::string plan_path = write("plan.json", dump_json(perturb::plan_to_json(plan)));
  Result p = run_cli({"perturb", "--plan", plan_path, "--gt", gt, "--out", path("pred.json"),
                      "--expected-out", path("expected.json")});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  Result e = run_cli({"evaluate", "--pred", path("pred.json"), "--gt", gt});
  ASSERT_EQ(e.code, kExitOk) << e.err;
  Json expected = metrics::evaluation_report_to_json(perturb::expected_report(plan, c));
  expected.erase("per_pattern");
  EXPECT_EQ(Json::parse(e.out), expected);
  std::ifstream f(path("expected.json"));
  Json file_report = Json::parse(f);
  file_report.erase("per_pattern");
  EXPECT_EQ(file_report, expected);

  Result id = run_cli({"evaluate", "--pred", gt, "--gt", gt, "--per-pattern"});
  Json ij = Json::parse(id.out);
  EXPECT_EQ(ij["hard"]["f1"], 1.0);
  EXPECT_EQ(ij["soft"]["f1"], 1.0);
  EXPECT_TRUE(ij.contains("per_pattern"));
}

TEST_F(CliTest, CriAndAssemble) {
  testing::Corpus c = testing::generate_corpus(6, 10);
  std::string gt = write_corpus("gt.json", c);
  std::string plan_path = write("plan.json", R"({"seed": 1, "steps": []})");
  Result p = run_cli({"perturb", "--plan", plan_path, "--gt", gt, "--conditions-out", path("cond.json")});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_EQ(Json::parse(p.out).size(), c.size());
  Result cri = run_cli({"cri-eval", "--pred", path("cond.json"), "--gt", gt});
  ASSERT_EQ(cri.code, kExitOk) << cri.err;
  Json cj = Json::parse(cri.out);
  for (auto& [k, v] : cj.items()) {
    if (v.is_number_float()) {
      EXPECT_EQ(v.get<double>(), 1.0) << k;
    }
  }
  Result a = run_cli({"assemble", "--input", gt});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  Json aj = Json::parse(a.out);
  ASSERT_EQ(aj.size(), c.size());
  for (const Json& img : aj) {
    EXPECT_EQ(img["reactions"].size(), c.at(img["image_id"].get<std::string>()).reactions.size());
  }
}

TEST_F(CliTest, Selfcheck) {
  Result r = run_cli({"selfcheck", "--images", "20", "--plans", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_TRUE(Json::parse(r.out)["passed"].get<bool>());
}

}  // namespace
}  // namespace rxnkit::cli
