#include "rxnkit/synthgen/dataset.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/rng.hpp"
#include "rxnkit/synthgen/annotate.hpp"
#include "rxnkit/synthgen/svg.hpp"

namespace rxnkit::synthgen {

void GenConfig::validate() const {
  if (count < 1) throw Error(ErrorCode::InvalidArgument, "count must be at least 1");
  double total = 0.0;
  for (const auto& [pattern, w] : pattern_weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::InvalidArgument,
                  "weight for " + std::string(to_string(pattern)) + " must be non-negative");
    }
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "pattern weights sum to zero");
  style.validate();
  for (Pattern p : kAllPatterns) {
    auto it = reactions_per_image.find(p);
    if (it == reactions_per_image.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "missing reactions_per_image range for " + std::string(to_string(p)));
    }
    const IntRange& r = it->second;
    int max = p == Pattern::Branch ? 3 : p == Pattern::Cycle ? 9 : 1000;
    if (r.lo < minimum_reactions(p) || r.hi < r.lo || r.hi > max) {
      throw Error(ErrorCode::InvalidArgument,
                  "reactions_per_image for " + std::string(to_string(p)) + " must lie in [" +
                      std::to_string(minimum_reactions(p)) + ", " + std::to_string(max) + "]");
    }
  }
  split_sizes(0, split_ratios);
}

std::uint64_t image_seed(std::uint64_t master_seed, std::size_t index) {
  return mix_seed(master_seed, static_cast<std::uint64_t>(index));
}

int minimum_reactions(Pattern pattern) {
  switch (pattern) {
    case Pattern::SingleLine: return 1;
    case Pattern::MultipleLine: return 2;
    case Pattern::Branch: return 2;
    case Pattern::Cycle: return 3;
  }
  return 1;
}

namespace {

constexpr std::size_t kMaxGroupSize = 2;

std::vector<std::string> capped(const std::vector<std::string>& v) {
  return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(v.size(), kMaxGroupSize))};
}

Pattern draw_pattern(const GenConfig& config, Rng& rng) {
  double total = 0.0;
  for (Pattern p : kAllPatterns) {
    auto it = config.pattern_weights.find(p);
    if (it != config.pattern_weights.end()) total += it->second;
  }
  double u = rng.uniform01() * total;
  Pattern last = Pattern::SingleLine;
  for (Pattern p : kAllPatterns) {
    auto it = config.pattern_weights.find(p);
    double w = it == config.pattern_weights.end() ? 0.0 : it->second;
    if (w <= 0.0) continue;
    last = p;
    if (u < w) return p;
    u -= w;
  }
  return last;
}

Layout plan(Pattern pattern, std::span<const ReactionRecord> records, const Style& style,
            Rng& rng, double wrap_fraction, const Depictor* depictor) {
  switch (pattern) {
    case Pattern::SingleLine: return plan_single_line(records, style, rng, {{}, {}, depictor});
    case Pattern::MultipleLine:
      return plan_multiple_line(records, style, rng, {{}, wrap_fraction, depictor});
    case Pattern::Branch: return plan_branch(records, style, rng, depictor);
    case Pattern::Cycle: return plan_cycle(records, style, rng, depictor);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown pattern");
}

}  // namespace

std::vector<ReactionRecord> adapt_records(Pattern pattern, std::span<const ReactionRecord> picked) {
  std::vector<ReactionRecord> out(picked.begin(), picked.end());
  const std::size_t k = out.size();
  for (std::size_t i = 0; i < k; ++i) {
    ReactionRecord& r = out[i];
    if (r.reactant_smiles.empty() || r.product_smiles.empty()) {
      throw Error(ErrorCode::InvalidArgument, "record needs a reactant and a product");
    }
    r.product_smiles = capped(r.product_smiles);
    switch (pattern) {
      case Pattern::SingleLine:
      case Pattern::MultipleLine:
        if (i + 1 < k) r.product_smiles.resize(1);
        if (i == 0) {
          r.reactant_smiles = capped(r.reactant_smiles);
        } else {
          r.reactant_smiles = {out[i - 1].product_smiles.front()};
        }
        break;
      case Pattern::Branch:
        r.reactant_smiles = {out.front().reactant_smiles.front()};
        break;
      case Pattern::Cycle:
        r.product_smiles.resize(1);
        r.reactant_smiles = {picked[(i + k - 1) % k].product_smiles.front()};
        break;
    }
  }
  return out;
}

GeneratedImage generate_image(std::span<const ReactionRecord> pool, const GenConfig& config,
                              std::size_t index, const Depictor* depictor) {
  GeneratedImage img;
  img.image_id = "img_" + std::to_string(index);
  img.seed = image_seed(config.master_seed, index);
  Rng rng(img.seed);

  Pattern pattern = draw_pattern(config, rng);
  Style style = draw_style(config.style, rng);
  const int min_k = minimum_reactions(pattern);
  if (pool.size() < static_cast<std::size_t>(min_k)) {
    throw Error(ErrorCode::RecordExhaustion,
                std::string(to_string(pattern)) + " images need " + std::to_string(min_k) +
                    " records but the pool has " + std::to_string(pool.size()));
  }
  const IntRange range = config.reactions_per_image.at(pattern);
  int hi = std::min(range.hi, static_cast<int>(pool.size()));
  int k = rng.uniform_int(std::min(range.lo, hi), hi);

  // Partial Fisher-Yates over pool indices.
  std::vector<std::size_t> order(pool.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (int i = 0; i < k; ++i) {
    auto u = static_cast<std::size_t>(i);
    std::size_t j = u + static_cast<std::size_t>(rng.below(order.size() - u));
    std::swap(order[u], order[j]);
  }
  std::vector<ReactionRecord> picked;
  for (int i = 0; i < k; ++i) picked.push_back(pool[order[static_cast<std::size_t>(i)]]);
  double wrap_fraction = rng.uniform_real(0.45, 0.75);
  const std::uint64_t layout_seed = rng.next();

  for (int kk = k;; --kk) {
    std::vector<ReactionRecord> group =
        adapt_records(pattern, std::span<const ReactionRecord>(picked).first(
                                   static_cast<std::size_t>(kk)));
    Rng layout_rng(mix_seed(layout_seed, static_cast<std::uint64_t>(kk)));
    try {
      img.layout = plan(pattern, group, style, layout_rng, wrap_fraction, depictor);
      img.records = std::move(group);
      break;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::LayoutOverflow || kk <= min_k) throw;
    }
  }
  img.annotation = annotate(img.layout, img.image_id);
  img.svg = render_svg(img.layout);
  return img;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (out) out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
}

Manifest generate_dataset(std::span<const ReactionRecord> pool, const GenConfig& config,
                          const std::filesystem::path& out_dir, const Depictor* depictor) {
  config.validate();
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw Error(ErrorCode::Io, "cannot create output directory " + out_dir.string() +
                                   (ec ? ": " + ec.message() : ""));
  }

  const auto n = static_cast<std::size_t>(config.count);
  Manifest manifest(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        GeneratedImage img = generate_image(pool, config, i, depictor);
        std::string svg_name = img.image_id + ".svg";
        std::string json_name = img.image_id + ".json";
        write_text_file(out_dir / svg_name, img.svg);
        write_text_file(out_dir / json_name, dump_json(annotation_to_json(img.annotation)));
        manifest[i] = {svg_name, json_name, img.annotation.pattern, img.seed};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  unsigned threads = config.threads ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<std::thread> pool_threads;
  for (unsigned t = 1; t < threads; ++t) pool_threads.emplace_back(work);
  work();
  for (std::thread& t : pool_threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  write_text_file(out_dir / "manifest.json", dump_json(manifest_to_json(manifest)));
  auto parts = split_dataset(manifest, config.split_ratios, config.master_seed);
  const char* names[3] = {"train.json", "val.json", "test.json"};
  for (std::size_t i = 0; i < 3; ++i) {
    write_text_file(out_dir / names[i], dump_json(manifest_to_json(parts[i])));
  }
  return manifest;
}

Json manifest_to_json(const Manifest& m) {
  Json arr = Json::array();
  for (const ManifestEntry& e : m) {
    Json j = Json::object();
    j["image"] = e.image;
    j["annotation"] = e.annotation;
    j["pattern"] = std::string(to_string(e.pattern));
    j["seed"] = e.seed;
    arr.push_back(std::move(j));
  }
  return arr;
}

Manifest manifest_from_json(const Json& j) {
  using namespace json_schema;
  if (!j.is_array()) fail("manifest", "expected an array");
  Manifest m;
  for (std::size_t i = 0; i < j.size(); ++i) {
    std::string path = "manifest[" + std::to_string(i) + "]";
    const Json& e = j[i];
    if (!e.is_object()) fail(path, "expected an object");
    ManifestEntry entry;
    entry.image = as_string(member(e, "image", path), path + ".image");
    entry.annotation = as_string(member(e, "annotation", path), path + ".annotation");
    std::string pattern = as_string(member(e, "pattern", path), path + ".pattern");
    auto p = pattern_from_string(pattern);
    if (!p) fail(path + ".pattern", "unknown pattern '" + pattern + "'");
    entry.pattern = *p;
    auto it = e.find("seed");
    if (it != e.end()) {
      if (!it->is_number_unsigned()) fail(path + ".seed", "expected a non-negative integer");
      entry.seed = it->get<std::uint64_t>();
    }
    m.push_back(std::move(entry));
  }
  return m;
}

}  // namespace rxnkit::synthgen
