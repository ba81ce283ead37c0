#include "rxnkit/assembler/export.hpp"

#include <fstream>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::assembler {

using namespace json_schema;

namespace {

Json optional_json(const std::optional<std::string>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::string> optional_from(const Json& obj, const char* key, const std::string& path) {
  const Json& v = member(obj, key, path);
  if (v.is_null()) return std::nullopt;
  return as_string(v, path + "." + key);
}

}  // namespace

Json assembled_to_json(const AssembledReaction& r) {
  Json j = Json::object();
  bool formable = !r.reactant_smiles.empty() && !r.product_smiles.empty();
  j["reaction_smiles"] = formable ? Json(to_reaction_smiles(r)) : Json(nullptr);
  j["reactant_smiles"] = r.reactant_smiles;
  j["agent_smiles"] = r.agent_smiles;
  j["product_smiles"] = r.product_smiles;
  j["agents_text"] = r.agents_text;
  j["solvents_text"] = r.solvents_text;
  j["temperature"] = optional_json(r.temperature);
  j["time"] = optional_json(r.time);
  j["yield_pct"] = optional_json(r.yield_pct);
  Json p = Json::object();
  p["reactants"] = r.provenance.reactants;
  p["agents"] = r.provenance.agents;
  p["products"] = r.provenance.products;
  p["texts"] = r.provenance.texts;
  j["provenance"] = std::move(p);
  return j;
}

AssembledReaction assembled_from_json(const Json& j, std::string_view path_view) {
  const std::string path(path_view);
  if (!j.is_object()) fail(path, "expected an object");
  AssembledReaction r;
  r.reactant_smiles = as_string_list(member(j, "reactant_smiles", path), path + ".reactant_smiles");
  r.agent_smiles = as_string_list(member(j, "agent_smiles", path), path + ".agent_smiles");
  r.product_smiles = as_string_list(member(j, "product_smiles", path), path + ".product_smiles");
  r.agents_text = as_string_list(member(j, "agents_text", path), path + ".agents_text");
  r.solvents_text = as_string_list(member(j, "solvents_text", path), path + ".solvents_text");
  r.temperature = optional_from(j, "temperature", path);
  r.time = optional_from(j, "time", path);
  r.yield_pct = optional_from(j, "yield_pct", path);
  const std::string pp = path + ".provenance";
  const Json& p = member(j, "provenance", path);
  r.provenance.reactants = as_int_list(member(p, "reactants", pp), pp + ".reactants");
  r.provenance.agents = as_int_list(member(p, "agents", pp), pp + ".agents");
  r.provenance.products = as_int_list(member(p, "products", pp), pp + ".products");
  r.provenance.texts = as_int_list(member(p, "texts", pp), pp + ".texts");
  return r;
}

Json export_json(std::span<const AssembledReaction> records) {
  Json arr = Json::array();
  for (const AssembledReaction& r : records) arr.push_back(assembled_to_json(r));
  return arr;
}

std::vector<AssembledReaction> import_json(const Json& j) {
  if (!j.is_array()) fail("reactions", "expected an array");
  std::vector<AssembledReaction> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(assembled_from_json(j[i], "reactions[" + std::to_string(i) + "]"));
  }
  return out;
}

void export_json_file(std::span<const AssembledReaction> records,
                      const std::filesystem::path& path) {
  std::string text = dump_json(export_json(records));
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (out) out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

}  // namespace rxnkit::assembler
