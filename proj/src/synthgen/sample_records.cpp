#include <array>
#include <string_view>

#include "rxnkit/core/rng.hpp"
#include "rxnkit/synthgen/records.hpp"

namespace rxnkit::synthgen {

namespace {

constexpr std::array<std::string_view, 24> kMolecules = {
    "c1ccccc1",           "Cc1ccccc1",          "O=Cc1ccccc1",        "OCc1ccccc1",
    "Nc1ccccc1",          "CC(=O)Nc1ccccc1",    "Oc1ccc(Br)cc1",      "COc1ccc(C=O)cc1",
    "CC(C)O",             "CC(=O)OCC",          "O=C(O)c1ccccc1",     "CCOC(=O)c1ccccc1",
    "C1CCOC1",            "c1ccncc1",           "CC(=O)c1ccccc1",     "CC(O)c1ccccc1",
    "Brc1ccc2ccccc2c1",   "N#Cc1ccccc1",        "NCc1ccccc1",         "O=[N+]([O-])c1ccccc1",
    "CN1CCCC1=O",         "C=CC(=O)OC",         "OC1CCCCC1",          "O=C1CCCCC1"};

constexpr std::array<std::string_view, 14> kTextAgents = {
    "Pd/C", "H2", "NaBH4", "Et3N", "K2CO3", "LiAlH4", "TFA", "DCC", "DMAP", "n-BuLi",
    "acetic acid", "sodium hydride", "Pd(PPh3)4", "m-CPBA"};

// Agents that are drawn as molecules.
constexpr std::array<std::string_view, 3> kMoleculeAgents = {"CC(=O)O", "O=S(=O)(O)O",
                                                             "CS(=O)(=O)Cl"};

constexpr std::array<std::string_view, 9> kSolvents = {
    "THF", "DMF", "MeOH", "EtOH", "DCM", "toluene", "water", "1,4-dioxane", "MeCN"};
constexpr std::array<std::string_view, 8> kTemperatures = {
    "25C", "0C", "reflux", "80 °C", "-78 °C", "rt", "110C", "35C"};
constexpr std::array<std::string_view, 6> kTimes = {"2h", "12 h", "overnight", "30 min", "4h",
                                                    "1 d"};
constexpr std::array<std::string_view, 7> kYields = {"90%", "75%", "62%", "quant.", "81%",
                                                     "45%", "98%"};

template <std::size_t N>
std::string pick(const std::array<std::string_view, N>& items, Rng& rng) {
  return std::string(items[rng.below(N)]);
}

}  // namespace

std::vector<ReactionRecord> sample_records(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ReactionRecord> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ReactionRecord r;
    int reactants = rng.bernoulli(0.3) ? 2 : 1;
    for (int j = 0; j < reactants; ++j) r.reactant_smiles.push_back(pick(kMolecules, rng));
    r.product_smiles.push_back(pick(kMolecules, rng));
    if (rng.bernoulli(0.15)) r.product_smiles.push_back(pick(kMolecules, rng));
    int agents = rng.uniform_int(0, 2);
    for (int j = 0; j < agents; ++j) r.agents.push_back(pick(kTextAgents, rng));
    if (rng.bernoulli(0.12)) r.agents.push_back(pick(kMoleculeAgents, rng));
    if (rng.bernoulli(0.7)) r.solvents.push_back(pick(kSolvents, rng));
    if (rng.bernoulli(0.6)) r.temperature = pick(kTemperatures, rng);
    if (rng.bernoulli(0.5)) r.time = pick(kTimes, rng);
    if (rng.bernoulli(0.5)) r.yield_pct = pick(kYields, rng);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rxnkit::synthgen
