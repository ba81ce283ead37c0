#include "rxnkit/core/types.hpp"

#include <algorithm>

#include "rxnkit/core/errors.hpp"

namespace rxnkit {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

const DetectedObject* ImageAnnotation::find_object(int id) const {
  auto it = std::find_if(objects.begin(), objects.end(),
                         [id](const DetectedObject& o) { return o.id == id; });
  return it == objects.end() ? nullptr : &*it;
}

void StyleConfig::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvalidArgument, "style: " + what);
  };
  if (font_size_px.lo <= 0 || font_size_px.hi < font_size_px.lo) fail("font_size_px range");
  if (line_width_px.lo <= 0 || line_width_px.hi < line_width_px.lo) fail("line_width_px range");
  if (!(molecule_scale.lo > 0.0) || molecule_scale.hi < molecule_scale.lo) {
    fail("molecule_scale range");
  }
  if (canvas_width_px <= 0 || canvas_height_px <= 0) fail("canvas dimensions");
  if (padding_px < 0 || 2 * padding_px >= std::min(canvas_width_px, canvas_height_px)) {
    fail("padding_px");
  }
}

std::string_view to_string(ObjectClass cls) {
  return cls == ObjectClass::Str ? "Str" : "Txt";
}

std::string_view to_string(ConditionRole role) {
  switch (role) {
    case ConditionRole::Agt: return "Agt";
    case ConditionRole::Svt: return "Svt";
    case ConditionRole::Tem: return "Tem";
    case ConditionRole::Time: return "Time";
    case ConditionRole::Yld: return "Yld";
  }
  return "?";
}

std::string_view to_string(Pattern pattern) {
  switch (pattern) {
    case Pattern::SingleLine: return "single-line";
    case Pattern::MultipleLine: return "multiple-line";
    case Pattern::Branch: return "branch";
    case Pattern::Cycle: return "cycle";
  }
  return "?";
}

std::optional<ObjectClass> object_class_from_string(std::string_view s) {
  if (s == "Str") return ObjectClass::Str;
  if (s == "Txt") return ObjectClass::Txt;
  return std::nullopt;
}

std::optional<ConditionRole> condition_role_from_string(std::string_view s) {
  for (ConditionRole r : kAllRoles) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::optional<Pattern> pattern_from_string(std::string_view s) {
  for (Pattern p : kAllPatterns) {
    if (to_string(p) == s) return p;
  }
  return std::nullopt;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) words.emplace_back(text.substr(start, i - start));
  }
  return words;
}

bool is_valid_word_text(std::string_view text) {
  return !text.empty() && std::none_of(text.begin(), text.end(), is_space);
}

}  // namespace rxnkit
