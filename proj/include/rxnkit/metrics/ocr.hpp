#pragma once

#include <cstddef>
#include <string_view>

namespace rxnkit::metrics {

// Edit distance over Unicode code points.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

// max(0, 1 - levenshtein / |gt|) on code points, case-sensitive, after
// stripping whitespace from both ends. Throws Error(InvalidArgument) when the
// stripped ground truth is empty.
double ocr_accuracy(std::string_view pred_text, std::string_view gt_text);

// Code-point length of the stripped text.
std::size_t ocr_length(std::string_view text);

}  // namespace rxnkit::metrics
