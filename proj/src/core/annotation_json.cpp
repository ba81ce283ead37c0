#include "rxnkit/core/annotation_json.hpp"

#include <charconv>

#include "rxnkit/core/errors.hpp"

namespace rxnkit {

namespace json_schema {

void fail(std::string_view path, std::string_view what) {
  throw Error(ErrorCode::Schema, std::string(path) + ": " + std::string(what));
}

const Json& member(const Json& obj, std::string_view key, std::string_view path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) fail(path, "missing key '" + std::string(key) + "'");
  return *it;
}

int as_int(const Json& v, std::string_view path) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  auto x = v.get<long long>();
  if (x < INT32_MIN || x > INT32_MAX) fail(path, "integer out of range");
  return static_cast<int>(x);
}

std::string as_string(const Json& v, std::string_view path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<int> as_int_list(const Json& v, std::string_view path) {
  if (!v.is_array()) fail(path, "expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_int(v[i], std::string(path) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> as_string_list(const Json& v, std::string_view path) {
  if (!v.is_array()) fail(path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_string(v[i], std::string(path) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace json_schema

using namespace json_schema;

namespace {

int parse_key(const std::string& key, std::string_view path) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), value);
  if (ec != std::errc() || ptr != key.data() + key.size() || key.empty()) {
    fail(path, "object key '" + key + "' is not an integer id");
  }
  return value;
}

}  // namespace

Json bbox_to_json(const BBox& b) { return Json::array({b.x_min, b.y_min, b.x_max, b.y_max}); }

Json words_to_json(const std::vector<ConditionWord>& words) {
  Json arr = Json::array();
  for (const ConditionWord& w : words) {
    Json o = Json::object();
    o["text"] = w.text;
    o["role"] = std::string(to_string(w.role));
    arr.push_back(std::move(o));
  }
  return arr;
}

std::vector<ConditionWord> words_from_json(const Json& j, std::string_view path) {
  if (!j.is_array()) fail(path, "expected an array of words");
  std::vector<ConditionWord> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string p = std::string(path) + "[" + std::to_string(i) + "]";
    std::string text = as_string(member(j[i], "text", p), p + ".text");
    std::string role_name = as_string(member(j[i], "role", p), p + ".role");
    auto role = condition_role_from_string(role_name);
    if (!role) fail(p + ".role", "unknown condition role '" + role_name + "'");
    out.push_back({std::move(text), *role});
  }
  return out;
}

Json annotation_to_json(const ImageAnnotation& a, bool include_maps) {
  Json j = Json::object();
  j["image_id"] = a.image_id;
  j["width_px"] = a.width_px;
  j["height_px"] = a.height_px;
  j["pattern"] = std::string(to_string(a.pattern));
  Json objects = Json::array();
  for (const DetectedObject& o : a.objects) {
    Json jo = Json::object();
    jo["id"] = o.id;
    jo["class"] = std::string(to_string(o.cls));
    jo["bbox"] = bbox_to_json(o.bbox);
    objects.push_back(std::move(jo));
  }
  j["objects"] = std::move(objects);
  Json reactions = Json::array();
  for (const ReactionAnnotation& r : a.reactions) {
    Json jr = Json::object();
    jr["reactants"] = r.reactants;
    jr["conditions"] = r.conditions;
    jr["products"] = r.products;
    reactions.push_back(std::move(jr));
  }
  j["reactions"] = std::move(reactions);
  if (include_maps) {
    Json texts = Json::object();
    for (const auto& [id, words] : a.condition_texts) texts[std::to_string(id)] = words_to_json(words);
    j["condition_texts"] = std::move(texts);
    Json smiles = Json::object();
    for (const auto& [id, s] : a.smiles) smiles[std::to_string(id)] = s;
    j["smiles"] = std::move(smiles);
  }
  return j;
}

ImageAnnotation annotation_from_json(const Json& j) {
  const std::string root = "annotation";
  if (!j.is_object()) fail(root, "expected an object");
  ImageAnnotation a;
  a.image_id = as_string(member(j, "image_id", root), "image_id");
  a.width_px = as_int(member(j, "width_px", root), "width_px");
  a.height_px = as_int(member(j, "height_px", root), "height_px");
  std::string pattern = as_string(member(j, "pattern", root), "pattern");
  auto p = pattern_from_string(pattern);
  if (!p) fail("pattern", "unknown pattern '" + pattern + "'");
  a.pattern = *p;

  const Json& objects = member(j, "objects", root);
  if (!objects.is_array()) fail("objects", "expected an array");
  for (std::size_t i = 0; i < objects.size(); ++i) {
    std::string path = "objects[" + std::to_string(i) + "]";
    DetectedObject o;
    o.id = as_int(member(objects[i], "id", path), path + ".id");
    std::string cls = as_string(member(objects[i], "class", path), path + ".class");
    auto c = object_class_from_string(cls);
    if (!c) fail(path + ".class", "expected \"Str\" or \"Txt\"");
    o.cls = *c;
    auto coords = as_int_list(member(objects[i], "bbox", path), path + ".bbox");
    if (coords.size() != 4) fail(path + ".bbox", "expected four coordinates");
    o.bbox = BBox{coords[0], coords[1], coords[2], coords[3]};
    a.objects.push_back(o);
  }

  const Json& reactions = member(j, "reactions", root);
  if (!reactions.is_array()) fail("reactions", "expected an array");
  for (std::size_t i = 0; i < reactions.size(); ++i) {
    std::string path = "reactions[" + std::to_string(i) + "]";
    ReactionAnnotation r;
    r.reactants = as_int_list(member(reactions[i], "reactants", path), path + ".reactants");
    r.conditions = as_int_list(member(reactions[i], "conditions", path), path + ".conditions");
    r.products = as_int_list(member(reactions[i], "products", path), path + ".products");
    a.reactions.push_back(std::move(r));
  }

  if (auto it = j.find("condition_texts"); it != j.end()) {
    if (!it->is_object()) fail("condition_texts", "expected an object");
    for (const auto& [key, value] : it->items()) {
      std::string path = "condition_texts." + key;
      a.condition_texts[parse_key(key, path)] = words_from_json(value, path);
    }
  }
  if (auto it = j.find("smiles"); it != j.end()) {
    if (!it->is_object()) fail("smiles", "expected an object");
    for (const auto& [key, value] : it->items()) {
      std::string path = "smiles." + key;
      a.smiles[parse_key(key, path)] = as_string(value, path);
    }
  }
  return a;
}

Json parse_json_text(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string(source) + ": JSON syntax error at byte " +
                                       std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump_json(const Json& j) {
  return j.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace rxnkit
