#include <gtest/gtest.h>

#include <cstdint>

#include "fixtures.hpp"
#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/core/binning.hpp"
#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/utf8.hpp"
#include "rxnkit/core/validate.hpp"

namespace rxnkit {
namespace {

using testing::str;
using testing::txt;

// Integer-only reference for integer pixel coordinates.
int ref_bin(std::int64_t c, std::int64_t extent) {
  std::int64_t b = c * 1000 / extent;
  return static_cast<int>(std::min<std::int64_t>(b, 999));
}

BBox ref_bins(std::int64_t x0, std::int64_t y0, std::int64_t x1, std::int64_t y1, int w, int h) {
  BBox b{ref_bin(x0, w), ref_bin(y0, h), ref_bin(x1, w), ref_bin(y1, h)};
  auto fix = [](int& lo, int& hi) {
    if (lo < hi) return;
    if (hi < 999) {
      hi = lo + 1;
    } else {
      lo = 998;
    }
  };
  fix(b.x_min, b.x_max);
  fix(b.y_min, b.y_max);
  return b;
}

TEST(Binning, FullImageMapsToFullRange) {
  EXPECT_EQ(pixel_to_bins({0, 0, 640, 480}, {640, 480}), (BBox{0, 0, 999, 999}));
}

TEST(Binning, FloorArithmetic) {
  EXPECT_EQ(pixel_to_bins({500, 250, 1000, 500}, {2000, 1000}), (BBox{250, 250, 500, 500}));
}

TEST(Binning, ZeroWidthRectangleIsRejected) {
  try {
    pixel_to_bins({10, 10, 10, 20}, {100, 100});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGeometry);
  }
}

TEST(Binning, OutOfImageAndInvertedAreRejected) {
  EXPECT_THROW(pixel_to_bins({-1, 0, 10, 10}, {100, 100}), Error);
  EXPECT_THROW(pixel_to_bins({0, 0, 101, 10}, {100, 100}), Error);
  EXPECT_THROW(pixel_to_bins({20, 0, 10, 10}, {100, 100}), Error);
  EXPECT_THROW(pixel_to_bins({0, 0, 10, 10}, {0, 100}), Error);
}

TEST(Binning, CollapsedSideIsWidened) {
  // 0.2 px on a 10000 px canvas lands in one bin.
  EXPECT_EQ(pixel_to_bins({1000.1, 0, 1000.3, 10000}, {10000, 10000}), (BBox{100, 0, 101, 999}));
  // At the right edge the widening goes left instead.
  EXPECT_EQ(pixel_to_bins({9999.5, 0, 10000, 10000}, {10000, 10000}), (BBox{998, 0, 999, 999}));
}

TEST(Binning, MatchesIntegerReference) {
  Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    int w = rng.uniform_int(1, 5000);
    int h = rng.uniform_int(1, 5000);
    if (w < 2 || h < 2) continue;
    int x0 = rng.uniform_int(0, w - 1);
    int x1 = rng.uniform_int(x0 + 1, w);
    int y0 = rng.uniform_int(0, h - 1);
    int y1 = rng.uniform_int(y0 + 1, h);
    ASSERT_EQ(pixel_to_bins({double(x0), double(y0), double(x1), double(y1)}, {w, h}),
              ref_bins(x0, y0, x1, y1, w, h))
        << x0 << "," << y0 << "," << x1 << "," << y1 << " on " << w << "x" << h;
  }
}

TEST(Binning, BinCenterInverse) {
  PixelRect r = bins_to_pixels({0, 0, 999, 999}, {1000, 1000});
  EXPECT_DOUBLE_EQ(r.x_min, 0.5);
  EXPECT_DOUBLE_EQ(r.y_min, 0.5);
  EXPECT_DOUBLE_EQ(r.x_max, 999.5);
  EXPECT_DOUBLE_EQ(r.y_max, 999.5);

  PixelRect s = bins_to_pixels({250, 250, 500, 500}, {2000, 1000});
  EXPECT_DOUBLE_EQ(s.x_min, 501.0);
  EXPECT_DOUBLE_EQ(s.y_min, 250.5);
  EXPECT_DOUBLE_EQ(s.x_max, 1001.0);
  EXPECT_DOUBLE_EQ(s.y_max, 500.5);
}

TEST(Binning, RoundTripOnRandomBoxes) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    BBox b = testing::random_bbox(rng);
    ImageDims dims{rng.uniform_int(1, 4000), rng.uniform_int(1, 4000)};
    ASSERT_EQ(pixel_to_bins(bins_to_pixels(b, dims), dims), b);
  }
}

bool contains(const BBox& outer, const BBox& inner) {
  return outer.x_min <= inner.x_min && outer.y_min <= inner.y_min &&
         inner.x_max <= outer.x_max && inner.y_max <= outer.y_max;
}

TEST(Binning, MonotoneForBoxesThatDoNotCollapse) {
  Rng rng(5);
  int checked = 0;
  for (int i = 0; i < 20000; ++i) {
    ImageDims dims{rng.uniform_int(10, 3000), rng.uniform_int(10, 3000)};
    double ax0 = rng.uniform_real(0, dims.width * 0.5);
    double ax1 = rng.uniform_real(ax0 + 1, dims.width);
    double ay0 = rng.uniform_real(0, dims.height * 0.5);
    double ay1 = rng.uniform_real(ay0 + 1, dims.height);
    double bx0 = rng.uniform_real(ax0, ax1);
    double bx1 = rng.uniform_real(bx0, ax1);
    double by0 = rng.uniform_real(ay0, ay1);
    double by1 = rng.uniform_real(by0, ay1);
    if (!(bx0 < bx1 && by0 < by1)) continue;
    // Inner boxes that collapse to one bin are widened; see the next test.
    auto raw = [](double c, int extent) { return std::min(999, static_cast<int>(c * 1000 / extent)); };
    if (raw(bx0, dims.width) >= raw(bx1, dims.width) || raw(by0, dims.height) >= raw(by1, dims.height)) {
      continue;
    }
    BBox b = pixel_to_bins({bx0, by0, bx1, by1}, dims);
    BBox a = pixel_to_bins({ax0, ay0, ax1, ay1}, dims);
    ASSERT_TRUE(contains(a, b));
    ++checked;
  }
  EXPECT_GT(checked, 10000);
}

TEST(Binning, WideningCanBreakContainmentForCollapsedBoxes) {
  // The outer box ends inside bin 500; the inner one collapses there and is
  // widened to 501, past the outer edge.
  ImageDims dims{1000, 1000};
  BBox outer = pixel_to_bins({400, 0, 500.5, 1000}, dims);
  BBox inner = pixel_to_bins({500.1, 0, 500.4, 1000}, dims);
  EXPECT_EQ(outer.x_max, 500);
  EXPECT_EQ(inner.x_min, 500);
  EXPECT_EQ(inner.x_max, 501);
  EXPECT_FALSE(contains(outer, inner));
}

ImageAnnotation single_line() {
  ImageAnnotation a;
  a.image_id = "img";
  a.width_px = 800;
  a.height_px = 600;
  a.objects = {str(0, {10, 20, 100, 200}), txt(1, {150, 50, 250, 150}),
               str(2, {300, 20, 400, 200})};
  a.reactions = {{{0}, {1}, {2}}};
  a.condition_texts[1] = {{"Pd", ConditionRole::Agt}, {"THF", ConditionRole::Svt}};
  a.smiles = {{0, "CCO"}, {2, "CC=O"}};
  return a;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const auto& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

TEST(Validate, WellFormedAnnotationHasNoViolations) {
  EXPECT_TRUE(validate_annotation(single_line()).empty());
}

TEST(Validate, DanglingId) {
  ImageAnnotation a = single_line();
  a.reactions[0].products.push_back(99);
  auto v = validate_annotation(a);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::DanglingId);
  EXPECT_EQ(v[0].id, 99);
  EXPECT_EQ(v[0].field, "reactions[0].products");
}

TEST(Validate, EmptyProductsAndReactants) {
  ImageAnnotation a = single_line();
  a.reactions[0].products.clear();
  auto v = validate_annotation(a);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].kind, ViolationKind::EmptyProducts);
  a.reactions[0].reactants.clear();
  EXPECT_TRUE(has_kind(validate_annotation(a), ViolationKind::EmptyReactants));
}

TEST(Validate, MapKeysMustMatchClasses) {
  ImageAnnotation a = single_line();
  a.condition_texts[0] = {{"x", ConditionRole::Agt}};
  a.smiles[1] = "C";
  a.smiles[7] = "N";
  auto v = validate_annotation(a);
  EXPECT_TRUE(has_kind(v, ViolationKind::ConditionTextOnNonText));
  EXPECT_TRUE(has_kind(v, ViolationKind::SmilesOnNonStructure));
  EXPECT_TRUE(has_kind(v, ViolationKind::UnknownKey));
}

TEST(Validate, ObjectLevelViolations) {
  ImageAnnotation a = single_line();
  a.width_px = 0;
  a.objects.push_back(str(0, {5, 5, 5, 9}));
  a.objects.push_back(str(-3, {0, 0, 1, 1000}));
  a.condition_texts[1].push_back({"two words", ConditionRole::Tem});
  a.smiles[0] = "";
  auto v = validate_annotation(a);
  for (auto k : {ViolationKind::InvalidDimensions, ViolationKind::DuplicateId,
                 ViolationKind::InvalidBBox, ViolationKind::NegativeId, ViolationKind::InvalidWord,
                 ViolationKind::EmptySmiles}) {
    EXPECT_TRUE(has_kind(v, k)) << to_string(k);
  }
}

TEST(AnnotationJson, KeyOrderAndRoundTrip) {
  ImageAnnotation a = single_line();
  Json j = annotation_to_json(a);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"image_id", "width_px", "height_px", "pattern",
                                            "objects", "reactions", "condition_texts", "smiles"}));
  EXPECT_EQ(annotation_from_json(parse_json_text(dump_json(j), "t")), a);
}

TEST(AnnotationJson, PredictionFormOmitsMaps) {
  ImageAnnotation a = single_line();
  Json j = annotation_to_json(a, false);
  EXPECT_FALSE(j.contains("smiles"));
  EXPECT_FALSE(j.contains("condition_texts"));
  ImageAnnotation back = annotation_from_json(j);
  EXPECT_EQ(back.objects, a.objects);
  EXPECT_TRUE(back.smiles.empty());
}

TEST(AnnotationJson, SchemaErrorsNameThePath) {
  Json j = annotation_to_json(single_line());
  j["objects"][1]["class"] = "Box";
  try {
    annotation_from_json(j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Schema);
    EXPECT_NE(std::string(e.what()).find("objects[1]"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_json_text("{\"a\": ", "broken.json"), Error);
}

TEST(Utf8, RoundTripAndReplacement) {
  std::string s = "80 °C µ";
  EXPECT_EQ(encode_utf8(decode_utf8(s)), s);
  EXPECT_EQ(decode_utf8(s).size(), 7u);
  std::u32string bad = decode_utf8(std::string("a\xff") + "b");
  EXPECT_EQ(bad, (std::u32string{U'a', 0xFFFD, U'b'}));
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(99), b(99);
  for (int i = 0; i < 1000; ++i) {
    int x = a.uniform_int(-3, 4);
    ASSERT_EQ(x, b.uniform_int(-3, 4));
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 4);
    double u = a.uniform01();
    ASSERT_EQ(u, b.uniform01());
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_NE(mix_seed(1, 2), mix_seed(2, 1));
  EXPECT_EQ(hash_string(""), 0xcbf29ce484222325ULL);
}

TEST(Words, SplitKeepsPunctuation) {
  EXPECT_EQ(split_words("  Pd/C, H2  \t90%"), (std::vector<std::string>{"Pd/C,", "H2", "90%"}));
  EXPECT_FALSE(is_valid_word_text(""));
  EXPECT_FALSE(is_valid_word_text("a b"));
  EXPECT_TRUE(is_valid_word_text("1,4-dioxane"));
}

}  // namespace
}  // namespace rxnkit
