#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace rxnkit::grammar {

enum class Task { ComponentId, ConditionInterp };

// Fills one of the two canonical task instructions. ConditionInterp needs a
// region placeholder; without one this throws Error(InvalidArgument).
std::string build_instruction(Task task, std::string_view image_placeholder,
                              std::optional<std::string_view> region_placeholder = std::nullopt);

}  // namespace rxnkit::grammar
