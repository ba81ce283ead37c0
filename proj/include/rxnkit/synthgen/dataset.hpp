#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "rxnkit/core/annotation_json.hpp"
#include "rxnkit/core/types.hpp"
#include "rxnkit/synthgen/depictor.hpp"
#include "rxnkit/synthgen/layout.hpp"

namespace rxnkit::synthgen {

struct GenConfig {
  int count = 100;
  std::map<Pattern, double> pattern_weights = {{Pattern::SingleLine, 1.0},
                                               {Pattern::MultipleLine, 1.0},
                                               {Pattern::Branch, 1.0},
                                               {Pattern::Cycle, 1.0}};
  StyleConfig style;
  std::uint64_t master_seed = 42;
  std::map<Pattern, IntRange> reactions_per_image = {{Pattern::SingleLine, {1, 3}},
                                                     {Pattern::MultipleLine, {2, 4}},
                                                     {Pattern::Branch, {2, 3}},
                                                     {Pattern::Cycle, {3, 6}}};
  std::array<double, 3> split_ratios = {0.8, 0.1, 0.1};
  // Worker threads for generate_dataset; 0 picks the hardware concurrency.
  unsigned threads = 0;

  // Throws Error(InvalidArgument) or Error(InvalidRatios).
  void validate() const;
};

struct GeneratedImage {
  std::string image_id;
  std::uint64_t seed = 0;
  // Records as drawn, after adapt_records and any overflow retry.
  std::vector<ReactionRecord> records;
  Layout layout;
  ImageAnnotation annotation;
  std::string svg;
};

struct ManifestEntry {
  std::string image;
  std::string annotation;
  Pattern pattern = Pattern::SingleLine;
  std::uint64_t seed = 0;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

using Manifest = std::vector<ManifestEntry>;

std::uint64_t image_seed(std::uint64_t master_seed, std::size_t index);

// Smallest record group each pattern needs.
int minimum_reactions(Pattern pattern);

// Rewrites a group of source records so it fits the pattern's topology:
// chains link through each record's first product, branches share the first
// record's first reactant, cycles close the loop of first products.
std::vector<ReactionRecord> adapt_records(Pattern pattern, std::span<const ReactionRecord> picked);

// One image, a pure function of (pool, config, index). Layout overflow is
// retried with one reaction fewer down to the pattern minimum.
GeneratedImage generate_image(std::span<const ReactionRecord> pool, const GenConfig& config,
                              std::size_t index, const Depictor* depictor = nullptr);

// Writes img_{i}.svg / img_{i}.json, manifest.json and train/val/test.json.
Manifest generate_dataset(std::span<const ReactionRecord> pool, const GenConfig& config,
                          const std::filesystem::path& out_dir,
                          const Depictor* depictor = nullptr);

Json manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const Json& j);

// Deterministic shuffle by seed, then largest-remainder partition.
std::array<Manifest, 3> split_dataset(const Manifest& manifest, const std::array<double, 3>& ratios,
                                      std::uint64_t seed);

// Partition sizes alone; throws Error(InvalidRatios).
std::array<std::size_t, 3> split_sizes(std::size_t n, const std::array<double, 3>& ratios);

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace rxnkit::synthgen
