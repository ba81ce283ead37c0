#include "rxnkit/cli/io.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::cli {

std::string read_text(const std::string& path, std::istream& in) {
  std::ostringstream s;
  if (path == "-") {
    s << in.rdbuf();
    return s.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::Io, "cannot open " + path);
  s << file.rdbuf();
  return s.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary);
  if (out) out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

namespace {

bool is_manifest(const Json& j) {
  return j.is_array() && !j.empty() && j[0].is_object() && j[0].contains("annotation") &&
         !j[0].contains("objects");
}

ImageAnnotation parse_annotation(const Json& j, const std::string& source) {
  try {
    return annotation_from_json(j);
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.what());
  }
}

}  // namespace

std::vector<ImageAnnotation> load_annotations(const std::string& path, std::istream& in) {
  const std::string source = path == "-" ? "<stdin>" : path;
  Json j = parse_json_text(read_text(path, in), source);
  std::vector<ImageAnnotation> out;
  if (is_manifest(j)) {
    std::filesystem::path base = path == "-" ? std::filesystem::path(".")
                                             : std::filesystem::path(path).parent_path();
    for (std::size_t i = 0; i < j.size(); ++i) {
      const std::string where = source + "[" + std::to_string(i) + "]";
      std::string file =
          json_schema::as_string(json_schema::member(j[i], "annotation", where), where + ".annotation");
      std::string full = (base / file).string();
      out.push_back(parse_annotation(parse_json_text(read_text(full, in), full), full));
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      out.push_back(parse_annotation(j[i], source + "[" + std::to_string(i) + "]"));
    }
  } else {
    out.push_back(parse_annotation(j, source));
  }
  return out;
}

std::map<std::string, ImageAnnotation> index_by_id(std::vector<ImageAnnotation> annotations) {
  std::map<std::string, ImageAnnotation> out;
  for (ImageAnnotation& a : annotations) {
    std::string id = a.image_id;
    if (!out.emplace(id, std::move(a)).second) {
      throw Error(ErrorCode::InvalidArgument, "duplicate image id '" + id + "'");
    }
  }
  return out;
}

std::string default_out_dir() {
  const char* env = std::getenv("RXNKIT_OUT_DIR");
  return env && *env ? env : "rxnkit_out";
}

}  // namespace rxnkit::cli
