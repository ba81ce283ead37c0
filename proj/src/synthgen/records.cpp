#include "rxnkit/synthgen/records.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::synthgen {

using namespace json_schema;

void validate_record(const ReactionRecord& r) {
  if (r.reactant_smiles.empty()) throw Error(ErrorCode::InvalidArgument, "record has no reactants");
  if (r.product_smiles.empty()) throw Error(ErrorCode::InvalidArgument, "record has no products");
  for (const auto* list : {&r.reactant_smiles, &r.product_smiles}) {
    for (const std::string& s : *list) {
      if (s.empty()) throw Error(ErrorCode::InvalidArgument, "record has an empty SMILES string");
    }
  }
  // Drawn items are separated by ", ", so a word ending in a comma would
  // split the item when read back.
  auto check_text = [](const std::string& value, const std::string& field) {
    auto words = split_words(value);
    if (words.empty()) {
      throw Error(ErrorCode::InvalidArgument, "record field " + field + " has no words");
    }
    for (const std::string& w : words) {
      if (w.back() == ',') {
        throw Error(ErrorCode::InvalidArgument,
                    "record field " + field + " has a word ending in ',': '" + w + "'");
      }
    }
  };
  for (std::size_t i = 0; i < r.agents.size(); ++i) check_text(r.agents[i], "agents[" + std::to_string(i) + "]");
  for (std::size_t i = 0; i < r.solvents.size(); ++i) {
    check_text(r.solvents[i], "solvents[" + std::to_string(i) + "]");
  }
  if (r.temperature) check_text(*r.temperature, "temperature");
  if (r.time) check_text(*r.time, "time");
  if (r.yield_pct) check_text(*r.yield_pct, "yield_pct");
}

Json record_to_json(const ReactionRecord& r) {
  Json j = Json::object();
  j["reactant_smiles"] = r.reactant_smiles;
  j["product_smiles"] = r.product_smiles;
  j["agents"] = r.agents;
  j["solvents"] = r.solvents;
  auto opt = [](const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); };
  j["temperature"] = opt(r.temperature);
  j["time"] = opt(r.time);
  j["yield_pct"] = opt(r.yield_pct);
  return j;
}

ReactionRecord record_from_json(const Json& j, std::string_view path) {
  if (!j.is_object()) fail(path, "expected an object");
  const std::string p(path);
  ReactionRecord r;
  r.reactant_smiles = as_string_list(member(j, "reactant_smiles", path), p + ".reactant_smiles");
  r.product_smiles = as_string_list(member(j, "product_smiles", path), p + ".product_smiles");
  auto list = [&](const char* key) {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::vector<std::string>{};
    return as_string_list(*it, p + "." + key);
  };
  auto optional = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    return as_string(*it, p + "." + key);
  };
  r.agents = list("agents");
  r.solvents = list("solvents");
  r.temperature = optional("temperature");
  r.time = optional("time");
  r.yield_pct = optional("yield_pct");
  try {
    validate_record(r);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return r;
}

std::vector<ReactionRecord> read_records_jsonl(std::istream& in, std::string_view source) {
  std::vector<ReactionRecord> out;
  std::string line;
  for (std::size_t n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::string where = std::string(source) + ":" + std::to_string(n);
    out.push_back(record_from_json(parse_json_text(line, where), where));
  }
  return out;
}

void write_records_jsonl(std::ostream& out, std::span<const ReactionRecord> records) {
  for (const ReactionRecord& r : records) {
    out << record_to_json(r).dump(-1, ' ', false, Json::error_handler_t::replace) << '\n';
  }
}

}  // namespace rxnkit::synthgen
