#include "rxnkit/core/validate.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace rxnkit {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::InvalidDimensions: return "invalid-dimensions";
    case ViolationKind::InvalidBBox: return "invalid-bbox";
    case ViolationKind::NegativeId: return "negative-id";
    case ViolationKind::DuplicateId: return "duplicate-id";
    case ViolationKind::DanglingId: return "dangling-id";
    case ViolationKind::EmptyReactants: return "empty-reactants";
    case ViolationKind::EmptyProducts: return "empty-products";
    case ViolationKind::ConditionTextOnNonText: return "condition-text-on-non-text";
    case ViolationKind::SmilesOnNonStructure: return "smiles-on-non-structure";
    case ViolationKind::UnknownKey: return "unknown-key";
    case ViolationKind::InvalidWord: return "invalid-word";
    case ViolationKind::EmptySmiles: return "empty-smiles";
  }
  return "unknown";
}

std::vector<Violation> validate_reactions(std::span<const DetectedObject> objects,
                                          std::span<const ReactionAnnotation> reactions) {
  std::vector<Violation> out;
  std::unordered_set<int> ids;
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const DetectedObject& o = objects[i];
    std::string field = "objects[" + std::to_string(i) + "]";
    if (o.id < 0) {
      out.push_back({ViolationKind::NegativeId, field, o.id, "object id must be non-negative"});
    }
    if (!ids.insert(o.id).second) {
      out.push_back({ViolationKind::DuplicateId, field, o.id, "object id is not unique"});
    }
    if (!o.bbox.is_valid()) {
      out.push_back({ViolationKind::InvalidBBox, field + ".bbox", o.id,
                     "bbox must satisfy 0 <= min < max <= 999 on both axes"});
    }
  }
  for (std::size_t r = 0; r < reactions.size(); ++r) {
    const ReactionAnnotation& rx = reactions[r];
    std::string base = "reactions[" + std::to_string(r) + "]";
    if (rx.reactants.empty()) {
      out.push_back({ViolationKind::EmptyReactants, base + ".reactants", -1,
                     "reactants must contain at least one object"});
    }
    if (rx.products.empty()) {
      out.push_back({ViolationKind::EmptyProducts, base + ".products", -1,
                     "products must contain at least one object"});
    }
    auto check = [&](const std::vector<int>& list, const char* name) {
      for (int id : list) {
        if (!ids.contains(id)) {
          out.push_back({ViolationKind::DanglingId, base + "." + name, id,
                         "id " + std::to_string(id) + " does not resolve to an object"});
        }
      }
    };
    check(rx.reactants, "reactants");
    check(rx.conditions, "conditions");
    check(rx.products, "products");
  }
  return out;
}

std::vector<Violation> validate_annotation(const ImageAnnotation& a) {
  std::vector<Violation> out;
  if (a.width_px <= 0 || a.height_px <= 0) {
    out.push_back({ViolationKind::InvalidDimensions, "width_px/height_px", -1,
                   "image dimensions must be positive"});
  }
  auto structural = validate_reactions(a.objects, a.reactions);
  out.insert(out.end(), structural.begin(), structural.end());

  std::unordered_map<int, ObjectClass> classes;
  for (const DetectedObject& o : a.objects) classes.emplace(o.id, o.cls);

  for (const auto& [id, words] : a.condition_texts) {
    std::string field = "condition_texts[" + std::to_string(id) + "]";
    auto it = classes.find(id);
    if (it == classes.end()) {
      out.push_back({ViolationKind::UnknownKey, field, id, "key does not name an object"});
    } else if (it->second != ObjectClass::Txt) {
      out.push_back({ViolationKind::ConditionTextOnNonText, field, id,
                     "condition text attached to a non-Txt object"});
    }
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (!is_valid_word_text(words[w].text)) {
        out.push_back({ViolationKind::InvalidWord, field + "[" + std::to_string(w) + "]", id,
                       "word text must be non-empty and whitespace-free"});
      }
    }
  }
  for (const auto& [id, smiles] : a.smiles) {
    std::string field = "smiles[" + std::to_string(id) + "]";
    auto it = classes.find(id);
    if (it == classes.end()) {
      out.push_back({ViolationKind::UnknownKey, field, id, "key does not name an object"});
    } else if (it->second != ObjectClass::Str) {
      out.push_back({ViolationKind::SmilesOnNonStructure, field, id,
                     "SMILES attached to a non-Str object"});
    }
    if (smiles.empty()) {
      out.push_back({ViolationKind::EmptySmiles, field, id, "SMILES string is empty"});
    }
  }
  return out;
}

std::string describe(const std::vector<Violation>& violations) {
  std::ostringstream s;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) s << "; ";
    s << to_string(violations[i].kind) << " at " << violations[i].field;
    if (violations[i].id >= 0) s << " (id " << violations[i].id << ")";
    s << ": " << violations[i].message;
  }
  return s.str();
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::Validation, "invalid annotation: " + describe(violations)),
      violations_(std::move(violations)) {}

}  // namespace rxnkit
