#include "rxnkit/perturb/apply.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string_view>

#include "rxnkit/core/errors.hpp"
#include "rxnkit/core/rng.hpp"
#include "rxnkit/core/utf8.hpp"

namespace rxnkit::perturb {

namespace {

constexpr std::u32string_view kAlphabet =
    U"ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";

struct State {
  AppliedPlan& out;
  std::uint64_t seed;
  std::uint64_t step;

  Rng corpus_rng() const { return Rng(mix_seed(seed, step)); }
  Rng image_rng(const std::string& id) const {
    return Rng(mix_seed(mix_seed(seed, hash_string(id)), step));
  }
};

using Slot = std::pair<std::string, std::size_t>;  // image id, reaction index

// Picks `count` distinct slots uniformly (partial Fisher-Yates).
std::vector<Slot> choose(std::vector<Slot> slots, int count, Rng rng) {
  const auto k = static_cast<std::size_t>(count);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
    std::swap(slots[i], slots[j]);
  }
  slots.resize(k);
  return slots;
}

int shift_for(int extent, double fraction, Rng& rng) {
  int max = static_cast<int>(std::floor(fraction * extent));
  return max > 0 ? rng.uniform_int(-max, max) : 0;
}

void jitter(State& s, const JitterBoxes& step) {
  for (auto& [id, img] : s.out.predictions) {
    Rng rng = s.image_rng(id);
    for (DetectedObject& o : img.objects) {
      BBox& b = o.bbox;
      int dx = shift_for(b.width(), step.max_shift_fraction, rng);
      int dy = shift_for(b.height(), step.max_shift_fraction, rng);
      dx = std::clamp(dx, -b.x_min, kMaxBin - b.x_max);
      dy = std::clamp(dy, -b.y_min, kMaxBin - b.y_max);
      b = {b.x_min + dx, b.y_min + dy, b.x_max + dx, b.y_max + dy};
    }
  }
}

void prune_objects(ImageAnnotation& img) {
  std::set<int> used;
  for (const ReactionAnnotation& r : img.reactions) {
    for (const auto* list : {&r.reactants, &r.conditions, &r.products}) {
      used.insert(list->begin(), list->end());
    }
  }
  std::erase_if(img.objects, [&](const DetectedObject& o) { return !used.contains(o.id); });
  std::erase_if(img.condition_texts, [&](const auto& kv) { return !used.contains(kv.first); });
  std::erase_if(img.smiles, [&](const auto& kv) { return !used.contains(kv.first); });
}

void drop(State& s, const DropReactions& step) {
  std::vector<Slot> slots;
  for (const auto& [id, img] : s.out.predictions) {
    for (std::size_t r = 0; r < img.reactions.size(); ++r) slots.emplace_back(id, r);
  }
  if (static_cast<std::size_t>(step.count) > slots.size()) {
    throw Error(ErrorCode::InapplicableStep, "cannot drop " + std::to_string(step.count) +
                                                 " reactions from a corpus of " +
                                                 std::to_string(slots.size()));
  }
  std::map<std::string, std::set<std::size_t, std::greater<>>> doomed;
  for (const Slot& slot : choose(std::move(slots), step.count, s.corpus_rng())) {
    doomed[slot.first].insert(slot.second);
  }
  for (const auto& [id, indices] : doomed) {
    ImageAnnotation& img = s.out.predictions.at(id);
    auto& traces = s.out.traces.at(id);
    for (std::size_t r : indices) {
      img.reactions.erase(img.reactions.begin() + static_cast<std::ptrdiff_t>(r));
      traces.erase(traces.begin() + static_cast<std::ptrdiff_t>(r));
    }
    prune_objects(img);
  }
}

void duplicate(State& s, const DuplicateReaction& step) {
  const auto index = static_cast<std::size_t>(step.index);
  for (auto& [id, img] : s.out.predictions) {
    if (index >= img.reactions.size()) {
      throw Error(ErrorCode::InapplicableStep, "image '" + id + "' has no reaction " +
                                                   std::to_string(step.index) + " to duplicate");
    }
    img.reactions.push_back(img.reactions[index]);
    auto& traces = s.out.traces.at(id);
    traces.push_back(traces[index]);
  }
}

std::optional<int> lowest_str_condition(const ImageAnnotation& img, const ReactionAnnotation& r) {
  std::optional<int> best;
  for (int id : r.conditions) {
    const DetectedObject* o = img.find_object(id);
    if (o && o->cls == ObjectClass::Str && (!best || id < *best)) best = id;
  }
  return best;
}

void relabel(State& s, const RelabelConditionAsReactant& step) {
  std::vector<Slot> slots;
  for (const auto& [id, img] : s.out.predictions) {
    for (std::size_t r = 0; r < img.reactions.size(); ++r) {
      if (lowest_str_condition(img, img.reactions[r])) slots.emplace_back(id, r);
    }
  }
  if (static_cast<std::size_t>(step.count) > slots.size()) {
    throw Error(ErrorCode::InapplicableStep,
                "cannot relabel " + std::to_string(step.count) + " reactions; only " +
                    std::to_string(slots.size()) + " have a structure among their conditions");
  }
  for (const Slot& slot : choose(std::move(slots), step.count, s.corpus_rng())) {
    ImageAnnotation& img = s.out.predictions.at(slot.first);
    ReactionAnnotation& r = img.reactions[slot.second];
    int moved = *lowest_str_condition(img, r);
    std::erase(r.conditions, moved);
    r.reactants.push_back(moved);
    std::sort(r.reactants.begin(), r.reactants.end());
    s.out.traces.at(slot.first)[slot.second].moved_to_reactants.push_back(moved);
  }
}

void corrupt(State& s, const CorruptText& step) {
  for (auto& [id, img] : s.out.predictions) {
    Rng rng = s.image_rng(id);
    for (auto& [object_id, words] : img.condition_texts) {
      for (ConditionWord& w : words) {
        std::u32string text = decode_utf8(w.text);
        for (char32_t& c : text) {
          if (!rng.bernoulli(step.char_error_rate)) continue;
          char32_t replacement = c;
          while (replacement == c) replacement = kAlphabet[rng.below(kAlphabet.size())];
          c = replacement;
        }
        w.text = encode_utf8(text);
      }
    }
  }
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

AppliedPlan apply_traced(const PerturbationPlan& plan, const Corpus& gts) {
  plan.validate();
  AppliedPlan out;
  out.predictions = gts;
  for (const auto& [id, img] : gts) {
    auto& traces = out.traces[id];
    for (std::size_t r = 0; r < img.reactions.size(); ++r) traces.push_back({r, {}});
  }
  for (std::size_t i = 0; i < plan.steps.size(); ++i) {
    State state{out, plan.seed, static_cast<std::uint64_t>(i)};
    std::visit(overloaded{
                   [&](const JitterBoxes& x) { jitter(state, x); },
                   [&](const DropReactions& x) { drop(state, x); },
                   [&](const DuplicateReaction& x) { duplicate(state, x); },
                   [&](const RelabelConditionAsReactant& x) { relabel(state, x); },
                   [&](const CorruptText& x) { corrupt(state, x); },
               },
               plan.steps[i]);
  }
  return out;
}

Corpus apply_plan(const PerturbationPlan& plan, const Corpus& gts) {
  return apply_traced(plan, gts).predictions;
}

ImageAnnotation apply_plan(const PerturbationPlan& plan, const ImageAnnotation& gt) {
  Corpus one{{gt.image_id, gt}};
  return apply_plan(plan, one).begin()->second;
}

}  // namespace rxnkit::perturb
