#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/core/types.hpp"

namespace rxnkit::cli {

// "-" reads from `in`. Throws Error(Io).
std::string read_text(const std::string& path, std::istream& in);
void write_text(const std::filesystem::path& path, std::string_view text);

// Accepts a single annotation object, an array of annotations, or a manifest
// (array of {image, annotation, ...} entries whose paths are relative to the
// manifest's directory).
std::vector<ImageAnnotation> load_annotations(const std::string& path, std::istream& in);

// Throws Error(InvalidArgument) on duplicate image ids.
std::map<std::string, ImageAnnotation> index_by_id(std::vector<ImageAnnotation> annotations);

// Default output directory: $RXNKIT_OUT_DIR, else "rxnkit_out".
std::string default_out_dir();

}  // namespace rxnkit::cli
