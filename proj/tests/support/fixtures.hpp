#pragma once

#include <map>
#include <string>
#include <vector>

#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/types.hpp"
#include "rxnkit/synthgen/dataset.hpp"
#include "rxnkit/synthgen/records.hpp"

namespace rxnkit::testing {

using Corpus = std::map<std::string, ImageAnnotation>;

inline DetectedObject obj(int id, ObjectClass cls, BBox b) { return {id, cls, b}; }
inline DetectedObject str(int id, BBox b) { return {id, ObjectClass::Str, b}; }
inline DetectedObject txt(int id, BBox b) { return {id, ObjectClass::Txt, b}; }

inline BBox random_bbox(Rng& rng) {
  BBox b;
  b.x_min = rng.uniform_int(0, 998);
  b.x_max = rng.uniform_int(b.x_min + 1, 999);
  b.y_min = rng.uniform_int(0, 998);
  b.y_max = rng.uniform_int(b.y_min + 1, 999);
  return b;
}

// Random structurally valid objects and reactions; every object is used by
// at least one reaction so a sequence round trip keeps all of them.
struct RandomReactions {
  std::vector<DetectedObject> objects;
  std::vector<ReactionAnnotation> reactions;
};

inline RandomReactions random_reactions(Rng& rng) {
  RandomReactions out;
  const int n = rng.uniform_int(0, 12);
  if (n == 0) return out;
  std::vector<int> ids;
  int next = rng.uniform_int(0, 5);
  for (int i = 0; i < n; ++i) {
    next += rng.uniform_int(1, 40);
    ObjectClass cls = rng.bernoulli(0.6) ? ObjectClass::Str : ObjectClass::Txt;
    out.objects.push_back({next, cls, random_bbox(rng)});
    ids.push_back(next);
  }
  auto pick = [&] { return ids[rng.below(ids.size())]; };
  const int reactions = rng.uniform_int(1, 4);
  for (int r = 0; r < reactions; ++r) {
    ReactionAnnotation rx;
    auto fill = [&](std::vector<int>& list, int lo, int hi) {
      int count = rng.uniform_int(lo, hi);
      for (int i = 0; i < count; ++i) list.push_back(pick());
    };
    fill(rx.reactants, 1, 3);
    fill(rx.conditions, 0, 2);
    fill(rx.products, 1, 2);
    out.reactions.push_back(std::move(rx));
  }
  // Attach unused objects to the last reaction's conditions.
  std::vector<bool> used(ids.size(), false);
  for (const auto& rx : out.reactions) {
    for (const auto* list : {&rx.reactants, &rx.conditions, &rx.products}) {
      for (int id : *list) {
        for (std::size_t i = 0; i < ids.size(); ++i) used[i] = used[i] || ids[i] == id;
      }
    }
  }
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!used[i]) out.reactions.back().conditions.push_back(ids[i]);
  }
  return out;
}

inline std::string random_word_text(Rng& rng) {
  static const std::vector<std::string> alphabet = {
      "a", "Z", "0", "7", "-", "%", "(", ")", ",", ".", "/", "°", "µ", "é", "[", "]", "\"", "+"};
  std::string s;
  int len = rng.uniform_int(1, 8);
  for (int i = 0; i < len; ++i) s += alphabet[rng.below(alphabet.size())];
  return s;
}

inline std::vector<ConditionWord> random_words(Rng& rng) {
  std::vector<ConditionWord> out;
  int n = rng.uniform_int(0, 8);
  for (int i = 0; i < n; ++i) {
    out.push_back({random_word_text(rng), kAllRoles[rng.below(kAllRoles.size())]});
  }
  return out;
}

inline std::vector<synthgen::GeneratedImage> generate_images(int count, std::uint64_t seed,
                                                             synthgen::GenConfig config = {}) {
  config.count = count;
  config.master_seed = seed;
  std::vector<ReactionRecord> pool = synthgen::sample_records(200, seed);
  std::vector<synthgen::GeneratedImage> out;
  for (int i = 0; i < count; ++i) {
    out.push_back(synthgen::generate_image(pool, config, static_cast<std::size_t>(i)));
  }
  return out;
}

inline Corpus generate_corpus(int count, std::uint64_t seed) {
  Corpus out;
  for (auto& img : generate_images(count, seed)) out.emplace(img.image_id, std::move(img.annotation));
  return out;
}

}  // namespace rxnkit::testing
