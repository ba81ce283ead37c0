#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "fixtures.hpp"
#include "rxnkit/core/binning.hpp"
#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/validate.hpp"
#include "rxnkit/synthgen/annotate.hpp"
#include "rxnkit/synthgen/condition_block.hpp"
#include "rxnkit/synthgen/dataset.hpp"
#include "rxnkit/synthgen/layout.hpp"
#include "rxnkit/synthgen/records.hpp"
#include "rxnkit/synthgen/smiles_formula.hpp"
#include "rxnkit/synthgen/style.hpp"
#include "rxnkit/synthgen/svg.hpp"

namespace rxnkit::synthgen {
namespace {

namespace fs = std::filesystem;

ReactionRecord rec(std::vector<std::string> reactants, std::vector<std::string> products,
                   std::vector<std::string> agents = {}, std::vector<std::string> solvents = {},
                   std::optional<std::string> temperature = {}, std::optional<std::string> time = {},
                   std::optional<std::string> yield = {}) {
  return {std::move(reactants), std::move(products), std::move(agents), std::move(solvents),
          std::move(temperature), std::move(time), std::move(yield)};
}

Style style() { return default_style(); }

int count_kind(const Layout& l, GlyphKind k) {
  int n = 0;
  for (const auto& g : l.glyphs) n += g.glyph.kind == k;
  return n;
}

std::vector<const PlacedGlyph*> of_kind(const Layout& l, GlyphKind k) {
  std::vector<const PlacedGlyph*> out;
  for (const auto& g : l.glyphs) {
    if (g.glyph.kind == k) out.push_back(&g);
  }
  return out;
}

std::string temp_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("rxnkit_synthgen_" + name);
  fs::remove_all(p);
  return p.string();
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream in(e.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    out[e.path().filename().string()] = s.str();
  }
  return out;
}

// Condition blocks -------------------------------------------------------

TEST(ConditionBlock, AgentsAboveOthersBelowInOrder) {
  Rng rng(1);
  ReactionRecord r = rec({"C"}, {"CC"}, {"Pd", "H2"}, {"THF"}, "25C", "2h", "90%");
  ConditionBlockOptions opt;
  opt.agents = AgentDepiction::AllText;
  opt.wrap_chars = 40;
  Glyph g = compose_condition_block(r, style(), rng, opt);
  ASSERT_EQ(g.kind, GlyphKind::TextBlock);
  ASSERT_EQ(g.runs.size(), 2u);
  EXPECT_EQ(g.runs[0].text, "Pd, H2");
  EXPECT_EQ(g.runs[1].text, "THF, 25C, 2h, 90%");
  std::vector<ConditionRole> roles;
  for (const WordBox& w : g.words) {
    roles.push_back(w.word.role);
    bool above = w.box.center().y < g.anchor.y;
    EXPECT_EQ(above, w.word.role == ConditionRole::Agt) << w.word.text;
  }
  EXPECT_EQ(roles, (std::vector<ConditionRole>{ConditionRole::Agt, ConditionRole::Agt,
                                               ConditionRole::Svt, ConditionRole::Tem,
                                               ConditionRole::Time, ConditionRole::Yld}));
  EXPECT_EQ(g.words[0].source_field, "agents[0]");
  EXPECT_EQ(g.words[5].source_field, "yield_pct");
}

TEST(ConditionBlock, EmptyRecordGivesEmptyBlock) {
  Rng rng(1);
  Glyph g = compose_condition_block(rec({"C"}, {"CC"}), style(), rng);
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(g.words.empty());
}

TEST(ConditionBlock, TemperatureOnly) {
  Rng rng(1);
  Glyph g = compose_condition_block(rec({"C"}, {"CC"}, {}, {}, "25C"), style(), rng);
  ASSERT_EQ(g.words.size(), 1u);
  EXPECT_EQ(g.words[0].word, (ConditionWord{"25C", ConditionRole::Tem}));
  EXPECT_EQ(g.words[0].source_field, "temperature");
  EXPECT_GT(g.words[0].box.y_min, g.anchor.y);
}

TEST(ConditionBlock, WrapsAndKeepsSeparatorOnWord) {
  Rng rng(1);
  ReactionRecord r = rec({"C"}, {"CC"}, {}, {"1,4-dioxane", "water"}, "80 °C", "12 h");
  Glyph g = compose_condition_block(r, style(), rng);
  std::vector<std::string> words;
  for (const auto& w : g.words) words.push_back(w.word.text);
  EXPECT_EQ(words, (std::vector<std::string>{"1,4-dioxane,", "water,", "80", "°C,", "12", "h"}));
  for (const auto& run : g.runs) EXPECT_LE(display_length(run.text), 16u) << run.text;
}

TEST(ConditionBlock, SmilesAgentsAreLeftForMolecules) {
  ReactionRecord r = rec({"C"}, {"CC"}, {"TFA", "CC(=O)O"});
  EXPECT_EQ(molecular_agents(r), std::vector<std::size_t>{1});
  Rng rng(1);
  Glyph g = compose_condition_block(r, style(), rng);
  ASSERT_EQ(g.words.size(), 1u);
  EXPECT_EQ(g.words[0].word.text, "TFA");
}

// Placeholder depiction -------------------------------------------------

TEST(SmilesFormula, ElementCounting) {
  EXPECT_EQ(hill_formula(*element_counts("CCO")), "C2H6O");
  EXPECT_EQ(hill_formula(*element_counts("c1ccccc1")), "C6H6");
  EXPECT_EQ(hill_formula(*element_counts("O=[N+]([O-])c1ccccc1")), "C6H5NO2");
  EXPECT_EQ(hill_formula(*element_counts("O")), "H2O");
  EXPECT_FALSE(looks_like_smiles("THF"));
  EXPECT_FALSE(looks_like_smiles("C1CC"));
  EXPECT_FALSE(looks_like_smiles("acetic acid"));
}

// Planners -------------------------------------------------------------

TEST(SingleLine, MinimalChain) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"Pd"})};
  Layout l = plan_single_line(r, style(), rng);
  EXPECT_EQ(count_kind(l, GlyphKind::Molecule), 2);
  EXPECT_EQ(count_kind(l, GlyphKind::Arrow), 1);
  ASSERT_EQ(count_kind(l, GlyphKind::TextBlock), 1);
  const PlacedGlyph* text = of_kind(l, GlyphKind::TextBlock)[0];
  ASSERT_EQ(text->glyph.words.size(), 1u);
  EXPECT_EQ(text->glyph.words[0].word.text, "Pd");
  EXPECT_TRUE(role_placement_violations(l).empty());
  // Reads left to right.
  auto mols = of_kind(l, GlyphKind::Molecule);
  const PlacedGlyph* arrow = of_kind(l, GlyphKind::Arrow)[0];
  EXPECT_LT(mols[0]->extent().x_max, arrow->extent().x_min + 1e-9);
  EXPECT_LT(arrow->extent().x_max, mols[1]->extent().x_min + 1e-9);
}

TEST(SingleLine, PlusBetweenReactants) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO", "O"}, {"CC=O"})};
  Layout l = plan_single_line(r, style(), rng);
  EXPECT_EQ(count_kind(l, GlyphKind::PlusSign), 1);
  auto mols = of_kind(l, GlyphKind::Molecule);
  const PlacedGlyph* plus = of_kind(l, GlyphKind::PlusSign)[0];
  EXPECT_LT(mols[0]->extent().x_max, plus->extent().x_min);
  EXPECT_LT(plus->extent().x_max, mols[1]->extent().x_min);
}

TEST(SingleLine, ChainSharesIntermediates) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"C"}, {"CC"}, {"H2"}), rec({"CC"}, {"CCC"}, {}, {"THF"}),
                                   rec({"CCC"}, {"CCCC"})};
  Layout l = plan_single_line(r, style(), rng);
  // 1 reactant + 2 intermediates + 1 product.
  EXPECT_EQ(count_kind(l, GlyphKind::Molecule), 4);
  EXPECT_EQ(count_kind(l, GlyphKind::Arrow), 3);
  ImageAnnotation a = annotate(l, "x");
  ASSERT_EQ(a.reactions.size(), 3u);
  EXPECT_EQ(a.reactions[0].products, a.reactions[1].reactants);
  EXPECT_EQ(a.reactions[1].products, a.reactions[2].reactants);
  EXPECT_TRUE(a.reactions[2].conditions.empty());
}

TEST(SingleLine, BrokenChainIsRejected) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"C"}, {"CC"}), rec({"N"}, {"CCC"})};
  try {
    plan_single_line(r, style(), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidChain);
  }
}

TEST(SingleLine, OverflowWhenTooLong) {
  Rng rng(2);
  std::vector<ReactionRecord> r;
  std::string prev = "C";
  for (int i = 0; i < 12; ++i) {
    std::string next = prev + "C";
    r.push_back(rec({prev}, {next}, {"m-CPBA", "LiAlH4"}));
    prev = next;
  }
  try {
    plan_single_line(r, style(), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LayoutOverflow);
  }
}

std::vector<ReactionRecord> four_step_chain() {
  return {rec({"c1ccccc1"}, {"Cc1ccccc1"}, {"NaBH4"}), rec({"Cc1ccccc1"}, {"O=Cc1ccccc1"}, {}, {"THF"}),
          rec({"O=Cc1ccccc1"}, {"OCc1ccccc1"}, {"TFA"}),
          rec({"OCc1ccccc1"}, {"Nc1ccccc1"}, {}, {}, "25C")};
}

TEST(MultipleLine, NarrowWrapBreaksAfterProducts) {
  Rng rng(4);
  ChainOptions opt;
  opt.wrap_width_px = 420;
  Layout l = plan_multiple_line(four_step_chain(), style(), rng, opt);
  EXPECT_EQ(l.pattern, Pattern::MultipleLine);

  // Group molecules into rows by arrow centerline.
  std::set<long> rows;
  for (const auto* a : of_kind(l, GlyphKind::Arrow)) {
    rows.insert(std::lround(a->placement.apply(a->glyph.anchor).y));
  }
  EXPECT_GE(rows.size(), 2u);

  // Every row's rightmost molecule is a product.
  std::map<long, const PlacedGlyph*> rightmost;
  for (const auto* m : of_kind(l, GlyphKind::Molecule)) {
    long row = std::lround(m->extent().center().y);
    auto it = rightmost.find(row);
    if (it == rightmost.end() || it->second->extent().x_max < m->extent().x_max) rightmost[row] = m;
  }
  EXPECT_GE(rightmost.size(), 2u);
  for (const auto& [row, m] : rightmost) {
    bool product = false;
    for (const auto& p : m->provenance) product = product || p.role == ComponentRole::Product;
    EXPECT_TRUE(product) << "row at y=" << row;
  }

  // Wrapped intermediates are re-drawn: equal SMILES under distinct ids.
  ImageAnnotation a = annotate(l, "ml");
  EXPECT_TRUE(validate_annotation(a).empty());
  std::map<std::string, int> seen;
  for (const auto& [id, s] : a.smiles) ++seen[s];
  int duplicated = 0;
  for (const auto& [s, n] : seen) duplicated += n > 1;
  EXPECT_EQ(duplicated, static_cast<int>(rows.size()) - 1);
  EXPECT_TRUE(role_placement_violations(l).empty());
}

TEST(MultipleLine, NoWrapMatchesSingleLine) {
  std::vector<ReactionRecord> r = {rec({"C"}, {"CC"}, {"H2"})};
  Rng a(9), b(9);
  ChainOptions opt;
  opt.wrap_width_px = 1e6;
  Layout single = plan_single_line(r, style(), a);
  Layout multi = plan_multiple_line(r, style(), b, opt);
  EXPECT_EQ(multi.pattern, Pattern::SingleLine);
  EXPECT_EQ(render_svg(single), render_svg(multi));
  EXPECT_EQ(annotate(single, "x"), annotate(multi, "x"));
}

TEST(Branch, TwoRecordsShareOneReactant) {
  Rng rng(5);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"H2"}),
                                   rec({"CCO"}, {"CCOC(C)=O"}, {}, {"THF"})};
  Layout l = plan_branch(r, style(), rng);
  EXPECT_EQ(count_kind(l, GlyphKind::Arrow), 2);
  EXPECT_EQ(count_kind(l, GlyphKind::Molecule), 3);
  ImageAnnotation a = annotate(l, "br");
  ASSERT_EQ(a.reactions.size(), 2u);
  EXPECT_EQ(a.reactions[0].reactants, a.reactions[1].reactants);
  EXPECT_NE(a.reactions[0].products, a.reactions[1].products);
  EXPECT_TRUE(validate_annotation(a).empty());
  EXPECT_TRUE(role_placement_violations(l).empty());
}

TEST(Branch, ThreeArrowsWithinFanAngle) {
  Rng rng(5);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"H2"}), rec({"CCO"}, {"CCOC"}),
                                   rec({"CCO"}, {"CCN"}, {}, {"DMF"}, "0C")};
  Layout l = plan_branch(r, style(), rng);
  auto arrows = of_kind(l, GlyphKind::Arrow);
  ASSERT_EQ(arrows.size(), 3u);
  for (const auto* a : arrows) {
    const auto& shaft = a->glyph.strokes.at(0).points;
    ASSERT_GE(shaft.size(), 2u);
    Point p0 = a->placement.apply(shaft[0]);
    Point p1 = a->placement.apply(shaft[1]);
    double deg = std::atan2(std::abs(p1.y - p0.y), p1.x - p0.x) * 180.0 / std::acos(-1.0);
    EXPECT_LE(deg, kMaxBranchAngleDeg + 1e-9);
  }
  ImageAnnotation a = annotate(l, "br");
  EXPECT_EQ(a.reactions[0].reactants, a.reactions[2].reactants);
}

TEST(Branch, DistinctFirstReactantsRejected) {
  Rng rng(5);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}), rec({"CCN"}, {"CCOC"})};
  try {
    plan_branch(r, style(), rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidBranch);
  }
  std::vector<ReactionRecord> one = {rec({"CCO"}, {"CC=O"})};
  EXPECT_THROW(plan_branch(one, style(), rng), Error);
}

std::vector<ReactionRecord> cycle_of(int k) {
  std::vector<std::string> nodes;
  for (int i = 0; i < k; ++i) nodes.push_back(std::string(static_cast<std::size_t>(i + 1), 'C') + "O");
  std::vector<ReactionRecord> out;
  for (int i = 0; i < k; ++i) {
    out.push_back(rec({nodes[static_cast<std::size_t>(i)]},
                      {nodes[static_cast<std::size_t>((i + 1) % k)]}, {i % 2 ? "H2" : "TFA"},
                      {i % 3 ? "THF" : "MeOH"}));
  }
  return out;
}

TEST(Cycle, FourNodesAtRightAngles) {
  Rng rng(6);
  Layout l = plan_cycle(cycle_of(4), style(), rng);
  auto mols = of_kind(l, GlyphKind::Molecule);
  ASSERT_EQ(mols.size(), 4u);
  EXPECT_EQ(count_kind(l, GlyphKind::Arrow), 4);
  Point c[4];
  for (int i = 0; i < 4; ++i) c[i] = mols[static_cast<std::size_t>(i)]->extent().center();
  // Top, right, bottom, left.
  EXPECT_NEAR(c[0].x, c[2].x, 1.0);
  EXPECT_NEAR(c[1].y, c[3].y, 1.0);
  EXPECT_LT(c[0].y, c[1].y);
  EXPECT_LT(c[1].y, c[2].y);
  EXPECT_LT(c[3].x, c[0].x);
  EXPECT_LT(c[0].x, c[1].x);
  EXPECT_NEAR((c[0].y + c[2].y) / 2, c[1].y, 1.0);
  EXPECT_NEAR((c[1].x + c[3].x) / 2, c[0].x, 1.0);
  ImageAnnotation a = annotate(l, "cy");
  EXPECT_TRUE(validate_annotation(a).empty());
  EXPECT_EQ(a.reactions.back().products, a.reactions.front().reactants);
}

TEST(Cycle, NineSteps) {
  Rng rng(6);
  Layout l = plan_cycle(cycle_of(9), style(), rng);
  ImageAnnotation a = annotate(l, "cy9");
  EXPECT_EQ(a.reactions.size(), 9u);
  EXPECT_TRUE(validate_annotation(a).empty());
  EXPECT_TRUE(role_placement_violations(l).empty());
}

TEST(Cycle, SizeAndClosureErrors) {
  Rng rng(6);
  auto code = [&](std::vector<ReactionRecord> r) {
    try {
      plan_cycle(r, style(), rng);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Io;
  };
  std::vector<ReactionRecord> two = {rec({"CO"}, {"CCO"}), rec({"CCO"}, {"CO"})};
  EXPECT_EQ(code(two), ErrorCode::UnsupportedSize);
  EXPECT_EQ(code(cycle_of(10)), ErrorCode::UnsupportedSize);
  auto open = cycle_of(4);
  open[3].product_smiles = {"N"};
  EXPECT_EQ(code(open), ErrorCode::InvalidCycle);
}

// SVG and annotation ---------------------------------------------------

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

TEST(Svg, EmptyLayoutHasOnlyCanvas) {
  Layout l;
  std::string s = render_svg(l);
  EXPECT_EQ(count(s, "<rect"), 1u);
  EXPECT_EQ(count(s, "<g"), 0u);
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("</svg>"), std::string::npos);
}

TEST(Svg, MinimalSingleLine) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"Pd"})};
  Layout l = plan_single_line(r, style(), rng);
  std::string s = render_svg(l);
  EXPECT_EQ(count(s, "data-object-id="), 3u);
  EXPECT_EQ(count(s, "class=\"arrow\""), 1u);
  EXPECT_EQ(s, render_svg(l));
}

TEST(Annotate, MinimalSingleLine) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"Pd"})};
  ImageAnnotation a = annotate(plan_single_line(r, style(), rng), "img");
  int strs = 0, txts = 0;
  for (const auto& o : a.objects) (o.cls == ObjectClass::Str ? strs : txts)++;
  EXPECT_EQ(strs, 2);
  EXPECT_EQ(txts, 1);
  ASSERT_EQ(a.reactions.size(), 1u);
  EXPECT_EQ(a.condition_texts.size(), 1u);
  EXPECT_EQ(a.smiles.at(a.reactions[0].reactants[0]), "CCO");
  EXPECT_EQ(a.smiles.at(a.reactions[0].products[0]), "CC=O");
  EXPECT_TRUE(validate_annotation(a).empty());
}

TEST(Annotate, EmptyConditions) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"})};
  ImageAnnotation a = annotate(plan_single_line(r, style(), rng), "img");
  ASSERT_EQ(a.reactions.size(), 1u);
  EXPECT_TRUE(a.reactions[0].conditions.empty());
  for (const auto& o : a.objects) EXPECT_EQ(o.cls, ObjectClass::Str);
}

TEST(Annotate, MolecularAgentBecomesStrCondition) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"}, {"TFA", "O=S(=O)(O)O"})};
  ImageAnnotation a = annotate(plan_single_line(r, style(), rng), "img");
  ASSERT_EQ(a.reactions[0].conditions.size(), 2u);
  std::set<std::string> smiles;
  for (int id : a.reactions[0].conditions) {
    if (a.smiles.count(id)) smiles.insert(a.smiles.at(id));
  }
  EXPECT_EQ(smiles, std::set<std::string>{"O=S(=O)(O)O"});
  EXPECT_TRUE(role_placement_violations(plan_single_line(r, style(), rng)).empty());
}

TEST(Annotate, MissingProvenanceIsAnInternalError) {
  Rng rng(2);
  std::vector<ReactionRecord> r = {rec({"CCO"}, {"CC=O"})};
  Layout l = plan_single_line(r, style(), rng);
  for (auto& g : l.glyphs) {
    if (g.is_object()) {
      g.provenance.clear();
      break;
    }
  }
  try {
    annotate(l, "x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InternalConsistency);
  }
}

// Dataset --------------------------------------------------------------

TEST(Dataset, SmallRunIsByteIdentical) {
  GenConfig c;
  c.count = 4;
  c.master_seed = 7;
  auto pool = sample_records(50, 1);
  std::string a = temp_dir("det_a"), b = temp_dir("det_b");
  Manifest m = generate_dataset(pool, c, a);
  generate_dataset(pool, c, b);
  EXPECT_EQ(m.size(), 4u);
  auto da = read_dir(a);
  EXPECT_EQ(da, read_dir(b));
  EXPECT_EQ(da.size(), 4u * 2 + 4);
  EXPECT_TRUE(da.count("img_3.svg"));
  EXPECT_TRUE(da.count("img_3.json"));
}

TEST(Dataset, ThreadCountDoesNotChangeOutput) {
  GenConfig c;
  c.count = 24;
  c.master_seed = 99;
  auto pool = sample_records(60, 2);
  c.threads = 1;
  std::string a = temp_dir("thr_1");
  generate_dataset(pool, c, a);
  c.threads = 4;
  std::string b = temp_dir("thr_4");
  generate_dataset(pool, c, b);
  EXPECT_EQ(read_dir(a), read_dir(b));
}

TEST(Dataset, SingleLineWeightOnly) {
  GenConfig c;
  c.pattern_weights = {{Pattern::SingleLine, 1.0}, {Pattern::MultipleLine, 0.0},
                       {Pattern::Branch, 0.0}, {Pattern::Cycle, 0.0}};
  auto images = testing::generate_images(40, 3, c);
  for (const auto& img : images) EXPECT_EQ(img.annotation.pattern, Pattern::SingleLine);
}

TEST(Dataset, SoundnessGeometryAndRolePlacement) {
  auto images = testing::generate_images(300, 1234);
  double worst = 1.0;
  for (const auto& img : images) {
    ASSERT_TRUE(validate_annotation(img.annotation).empty())
        << img.image_id << ": " << describe(validate_annotation(img.annotation));
    ASSERT_TRUE(role_placement_violations(img.layout).empty()) << img.image_id;
    for (const auto& rx : img.annotation.reactions) {
      ASSERT_FALSE(rx.reactants.empty());
      ASSERT_FALSE(rx.products.empty());
    }
    std::vector<int> ids = object_ids(img.layout);
    ImageDims dims{img.layout.canvas_width_px, img.layout.canvas_height_px};
    for (std::size_t g = 0; g < ids.size(); ++g) {
      if (ids[g] < 0) continue;
      Rect e = img.layout.glyphs[g].extent();
      ASSERT_GE(e.x_min, 0.0);
      ASSERT_GE(e.y_min, 0.0);
      ASSERT_LE(e.x_max, dims.width);
      ASSERT_LE(e.y_max, dims.height);
      const DetectedObject* o = img.annotation.find_object(ids[g]);
      ASSERT_NE(o, nullptr);
      double iou = pixel_iou(bins_to_pixels(o->bbox, dims), {e.x_min, e.y_min, e.x_max, e.y_max});
      worst = std::min(worst, iou);
    }
  }
  EXPECT_GE(worst, 0.9);
}

TEST(Dataset, PatternCoverage) {
  // With four equal weights, the chance that some pattern is absent from 200
  // independent draws is at most 4 * (3/4)^200.
  double miss = 4.0 * std::pow(0.75, 200);
  ASSERT_LT(miss, 1e-3);
  auto images = testing::generate_images(200, 77);
  std::set<Pattern> seen;
  for (const auto& img : images) seen.insert(img.annotation.pattern);
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Dataset, RecordExhaustion) {
  GenConfig c;
  c.pattern_weights = {{Pattern::SingleLine, 0.0}, {Pattern::MultipleLine, 0.0},
                       {Pattern::Branch, 0.0}, {Pattern::Cycle, 1.0}};
  auto pool = sample_records(2, 1);
  try {
    generate_image(pool, c, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RecordExhaustion);
  }
}

TEST(Dataset, AdaptedRecordsFitTheirTopology) {
  auto pool = sample_records(10, 4);
  auto chain = adapt_records(Pattern::SingleLine, std::span(pool).first(3));
  EXPECT_EQ(chain[1].reactant_smiles, std::vector<std::string>{chain[0].product_smiles[0]});
  auto branch = adapt_records(Pattern::Branch, std::span(pool).first(3));
  EXPECT_EQ(branch[2].reactant_smiles[0], branch[0].reactant_smiles[0]);
  auto cycle = adapt_records(Pattern::Cycle, std::span(pool).first(4));
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(cycle[i].reactant_smiles, std::vector<std::string>{cycle[(i + 3) % 4].product_smiles[0]});
  }
}

TEST(Dataset, UnwritableDirectory) {
  GenConfig c;
  c.count = 1;
  auto pool = sample_records(10, 1);
  std::string file = temp_dir("file");
  std::ofstream(file) << "x";
  try {
    generate_dataset(pool, c, fs::path(file) / "sub");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Io);
  }
}

TEST(Dataset, ManifestJsonRoundTrip) {
  Manifest m = {{"img_0.svg", "img_0.json", Pattern::Cycle, 12345678901234ULL}};
  EXPECT_EQ(manifest_from_json(manifest_to_json(m)), m);
}

TEST(GenConfig, Validation) {
  GenConfig c;
  EXPECT_NO_THROW(c.validate());
  c.count = 0;
  EXPECT_THROW(c.validate(), Error);
  c = GenConfig{};
  c.split_ratios = {0.5, 0.5, 0.1};
  EXPECT_THROW(c.validate(), Error);
  c = GenConfig{};
  for (auto& [p, w] : c.pattern_weights) w = 0;
  EXPECT_THROW(c.validate(), Error);
  c = GenConfig{};
  c.style.font_size_px = {12, 8};
  EXPECT_THROW(c.validate(), Error);
}

// Split ----------------------------------------------------------------

Manifest numbered(std::size_t n) {
  Manifest m;
  for (std::size_t i = 0; i < n; ++i) m.push_back({"i" + std::to_string(i), "a" + std::to_string(i), Pattern::SingleLine, i});
  return m;
}

TEST(Split, EightOneOne) {
  auto parts = split_dataset(numbered(10), {0.8, 0.1, 0.1}, 1);
  EXPECT_EQ(parts[0].size(), 8u);
  EXPECT_EQ(parts[1].size(), 1u);
  EXPECT_EQ(parts[2].size(), 1u);
}

TEST(Split, SingleItemAllTrain) {
  auto sizes = split_sizes(1, {1.0, 0.0, 0.0});
  EXPECT_EQ(sizes, (std::array<std::size_t, 3>{1, 0, 0}));
}

TEST(Split, LargestRemainder) {
  // Quotas 3.5/1.75/1.75: the two .75 remainders win the leftover items.
  EXPECT_EQ(split_sizes(7, {0.5, 0.25, 0.25}), (std::array<std::size_t, 3>{3, 2, 2}));
  // Quotas 4.2/1.4/1.4: tie on .4 goes to the earlier partition.
  EXPECT_EQ(split_sizes(7, {0.6, 0.2, 0.2}), (std::array<std::size_t, 3>{4, 2, 1}));
  EXPECT_EQ(split_sizes(0, {0.8, 0.1, 0.1}), (std::array<std::size_t, 3>{0, 0, 0}));
}

TEST(Split, DeterministicDisjointExhaustive) {
  Manifest m = numbered(101);
  auto a = split_dataset(m, {0.7, 0.2, 0.1}, 5);
  auto b = split_dataset(m, {0.7, 0.2, 0.1}, 5);
  EXPECT_EQ(a, b);
  std::multiset<std::string> all;
  for (const auto& part : a) {
    for (const auto& e : part) all.insert(e.image);
  }
  EXPECT_EQ(all.size(), 101u);
  EXPECT_EQ(std::set<std::string>(all.begin(), all.end()).size(), 101u);
  EXPECT_NE(split_dataset(m, {0.7, 0.2, 0.1}, 6), a);
}

TEST(Split, InvalidRatios) {
  for (std::array<double, 3> r : {std::array<double, 3>{0.8, 0.1, 0.2},
                                  std::array<double, 3>{1.1, -0.1, 0.0}}) {
    try {
      split_sizes(10, r);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidRatios);
    }
  }
}

// Records --------------------------------------------------------------

TEST(Records, JsonlRoundTrip) {
  auto pool = sample_records(30, 9);
  std::stringstream s;
  write_records_jsonl(s, pool);
  EXPECT_EQ(read_records_jsonl(s, "mem"), pool);
}

TEST(Records, ErrorsNameTheLine) {
  std::istringstream s(
      "{\"reactant_smiles\":[\"C\"],\"product_smiles\":[\"CC\"]}\n\n"
      "{\"reactant_smiles\":[],\"product_smiles\":[\"CC\"]}\n");
  try {
    read_records_jsonl(s, "r.jsonl");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("r.jsonl:3"), std::string::npos) << e.what();
  }
}

TEST(Records, ValueWordsMustNotEndInComma) {
  EXPECT_THROW(validate_record(rec({"C"}, {"CC"}, {"Pd,"})), Error);
  EXPECT_THROW(validate_record(rec({"C"}, {"CC"}, {}, {"  "})), Error);
  EXPECT_NO_THROW(validate_record(rec({"C"}, {"CC"}, {}, {"1,4-dioxane"})));
}

}  // namespace
}  // namespace rxnkit::synthgen
