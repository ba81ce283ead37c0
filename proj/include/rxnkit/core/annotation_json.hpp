#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rxnkit/core/types.hpp"

namespace rxnkit {

using Json = nlohmann::ordered_json;

// Canonical annotation document. With include_maps = false the `smiles` and
// `condition_texts` keys are omitted (prediction-file form).
Json annotation_to_json(const ImageAnnotation& a, bool include_maps = true);

// Accepts both the full and the prediction form; missing maps read as empty.
// Throws Error(Schema) naming the offending path.
ImageAnnotation annotation_from_json(const Json& j);

Json words_to_json(const std::vector<ConditionWord>& words);
std::vector<ConditionWord> words_from_json(const Json& j, std::string_view path = "words");

Json bbox_to_json(const BBox& b);

// Parses JSON text; syntax errors become Error(Schema) carrying `source`
// and the byte offset.
Json parse_json_text(std::string_view text, std::string_view source);

// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

// Small schema helpers shared by the other readers.
namespace json_schema {

const Json& member(const Json& obj, std::string_view key, std::string_view path);
int as_int(const Json& v, std::string_view path);
std::string as_string(const Json& v, std::string_view path);
std::vector<int> as_int_list(const Json& v, std::string_view path);
std::vector<std::string> as_string_list(const Json& v, std::string_view path);
[[noreturn]] void fail(std::string_view path, std::string_view what);

}  // namespace json_schema

}  // namespace rxnkit
