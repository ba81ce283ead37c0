#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rxnkit {

inline constexpr int kMaxBin = 999;
inline constexpr int kBinCount = 1000;

// Box in normalized coordinate bins; bin 0 is the left/top edge of the image
// and bin 999 the right/bottom edge.
struct BBox {
  int x_min = 0;
  int y_min = 0;
  int x_max = 1;
  int y_max = 1;

  int width() const { return x_max - x_min; }
  int height() const { return y_max - y_min; }
  long long area() const { return static_cast<long long>(width()) * height(); }
  bool is_valid() const {
    return 0 <= x_min && x_min < x_max && x_max <= kMaxBin && 0 <= y_min && y_min < y_max &&
           y_max <= kMaxBin;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

enum class ObjectClass { Str, Txt };

struct DetectedObject {
  int id = 0;
  ObjectClass cls = ObjectClass::Str;
  BBox bbox;

  friend bool operator==(const DetectedObject&, const DetectedObject&) = default;
};

struct ReactionAnnotation {
  std::vector<int> reactants;
  std::vector<int> conditions;
  std::vector<int> products;

  friend bool operator==(const ReactionAnnotation&, const ReactionAnnotation&) = default;
};

enum class ConditionRole { Agt, Svt, Tem, Time, Yld };

inline constexpr std::array<ConditionRole, 5> kAllRoles = {
    ConditionRole::Agt, ConditionRole::Svt, ConditionRole::Tem, ConditionRole::Time,
    ConditionRole::Yld};

struct ConditionWord {
  std::string text;
  ConditionRole role = ConditionRole::Agt;

  friend bool operator==(const ConditionWord&, const ConditionWord&) = default;
};

enum class Pattern { SingleLine, MultipleLine, Branch, Cycle };

inline constexpr std::array<Pattern, 4> kAllPatterns = {Pattern::SingleLine, Pattern::MultipleLine,
                                                        Pattern::Branch, Pattern::Cycle};

struct ImageAnnotation {
  std::string image_id;
  int width_px = 1;
  int height_px = 1;
  Pattern pattern = Pattern::SingleLine;
  std::vector<DetectedObject> objects;
  std::vector<ReactionAnnotation> reactions;
  std::map<int, std::vector<ConditionWord>> condition_texts;
  std::map<int, std::string> smiles;

  const DetectedObject* find_object(int id) const;

  friend bool operator==(const ImageAnnotation&, const ImageAnnotation&) = default;
};

struct ReactionRecord {
  std::vector<std::string> reactant_smiles;
  std::vector<std::string> product_smiles;
  std::vector<std::string> agents;
  std::vector<std::string> solvents;
  std::optional<std::string> temperature;
  std::optional<std::string> time;
  std::optional<std::string> yield_pct;

  friend bool operator==(const ReactionRecord&, const ReactionRecord&) = default;
};

struct IntRange {
  int lo = 0;
  int hi = 0;

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct RealRange {
  double lo = 0.0;
  double hi = 0.0;

  friend bool operator==(const RealRange&, const RealRange&) = default;
};

// Augmentation ranges; concrete values are drawn per image.
struct StyleConfig {
  IntRange font_size_px{10, 18};
  IntRange line_width_px{1, 3};
  RealRange molecule_scale{0.7, 1.3};
  int canvas_width_px = 1000;
  int canvas_height_px = 800;
  int padding_px = 20;

  // Throws Error(InvalidArgument) on empty ranges or non-positive bounds.
  void validate() const;
};

std::string_view to_string(ObjectClass cls);
std::string_view to_string(ConditionRole role);
std::string_view to_string(Pattern pattern);

std::optional<ObjectClass> object_class_from_string(std::string_view s);
std::optional<ConditionRole> condition_role_from_string(std::string_view s);
std::optional<Pattern> pattern_from_string(std::string_view s);

// Whitespace-delimited words; punctuation stays attached to its word.
std::vector<std::string> split_words(std::string_view text);

bool is_valid_word_text(std::string_view text);

}  // namespace rxnkit
