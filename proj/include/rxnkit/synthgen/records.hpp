#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/core/types.hpp"

namespace rxnkit::synthgen {

// Throws Error(InvalidArgument) unless there is at least one reactant and one
// product, every SMILES string is non-empty, and every condition value has at
// least one word with no word ending in ','.
void validate_record(const ReactionRecord& r);

Json record_to_json(const ReactionRecord& r);
ReactionRecord record_from_json(const Json& j, std::string_view path = "record");

// One JSON object per line; blank lines are skipped. Errors name the line.
std::vector<ReactionRecord> read_records_jsonl(std::istream& in, std::string_view source);
void write_records_jsonl(std::ostream& out, std::span<const ReactionRecord> records);

// Built-in pool of plausible records for demos and tests.
std::vector<ReactionRecord> sample_records(std::size_t count, std::uint64_t seed);

}  // namespace rxnkit::synthgen
