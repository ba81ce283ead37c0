#pragma once

#include <string>
#include <string_view>

namespace rxnkit {

// Decodes UTF-8 into code points. Malformed sequences decode to U+FFFD, one
// per offending byte, so every input yields a result.
std::u32string decode_utf8(std::string_view s);

std::string encode_utf8(std::u32string_view s);

}  // namespace rxnkit
