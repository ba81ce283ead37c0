#include "rxnkit/perturb/plan.hpp"

#include <cmath>

#include "rxnkit/core/errors.hpp"

namespace rxnkit::perturb {

using namespace json_schema;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_fraction(double f, const char* what) {
  if (!std::isfinite(f) || f < 0.0 || f >= 1.0) {
    throw Error(ErrorCode::InvalidArgument, std::string(what) + " must lie in [0, 1)");
  }
}

void check_count(int c, const char* what) {
  if (c < 0) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be non-negative");
}

double as_real(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

}  // namespace

void PerturbationPlan::validate() const {
  for (const Step& s : steps) {
    std::visit(overloaded{
                   [](const JitterBoxes& j) { check_fraction(j.max_shift_fraction, "max_shift_fraction"); },
                   [](const DropReactions& d) { check_count(d.count, "drop count"); },
                   [](const DuplicateReaction& d) { check_count(d.index, "duplicate index"); },
                   [](const RelabelConditionAsReactant& r) { check_count(r.count, "relabel count"); },
                   [](const CorruptText& c) { check_fraction(c.char_error_rate, "char_error_rate"); },
               },
               s);
  }
}

std::string_view step_name(const Step& step) {
  return std::visit(overloaded{
                        [](const JitterBoxes&) { return std::string_view("jitter_boxes"); },
                        [](const DropReactions&) { return std::string_view("drop_reactions"); },
                        [](const DuplicateReaction&) { return std::string_view("duplicate_reaction"); },
                        [](const RelabelConditionAsReactant&) {
                          return std::string_view("relabel_condition_as_reactant");
                        },
                        [](const CorruptText&) { return std::string_view("corrupt_text"); },
                    },
                    step);
}

Json plan_to_json(const PerturbationPlan& plan) {
  Json j = Json::object();
  j["seed"] = plan.seed;
  Json steps = Json::array();
  for (const Step& s : plan.steps) {
    Json e = Json::object();
    e["op"] = std::string(step_name(s));
    std::visit(overloaded{
                   [&](const JitterBoxes& x) { e["max_shift_fraction"] = x.max_shift_fraction; },
                   [&](const DropReactions& x) { e["count"] = x.count; },
                   [&](const DuplicateReaction& x) { e["index"] = x.index; },
                   [&](const RelabelConditionAsReactant& x) { e["count"] = x.count; },
                   [&](const CorruptText& x) { e["char_error_rate"] = x.char_error_rate; },
               },
               s);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  return j;
}

PerturbationPlan plan_from_json(const Json& j) {
  if (!j.is_object()) fail("plan", "expected an object");
  PerturbationPlan plan;
  if (auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned()) fail("plan.seed", "expected a non-negative integer");
    plan.seed = it->get<std::uint64_t>();
  }
  const Json& steps = member(j, "steps", "plan");
  if (!steps.is_array()) fail("plan.steps", "expected an array");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string path = "plan.steps[" + std::to_string(i) + "]";
    const Json& e = steps[i];
    if (!e.is_object()) fail(path, "expected an object");
    const std::string op = as_string(member(e, "op", path), path + ".op");
    if (op == "jitter_boxes") {
      plan.steps.push_back(JitterBoxes{as_real(member(e, "max_shift_fraction", path), path + ".max_shift_fraction")});
    } else if (op == "drop_reactions") {
      plan.steps.push_back(DropReactions{as_int(member(e, "count", path), path + ".count")});
    } else if (op == "duplicate_reaction") {
      plan.steps.push_back(DuplicateReaction{as_int(member(e, "index", path), path + ".index")});
    } else if (op == "relabel_condition_as_reactant") {
      plan.steps.push_back(RelabelConditionAsReactant{as_int(member(e, "count", path), path + ".count")});
    } else if (op == "corrupt_text") {
      plan.steps.push_back(CorruptText{as_real(member(e, "char_error_rate", path), path + ".char_error_rate")});
    } else {
      fail(path + ".op", "unknown step '" + op + "'");
    }
  }
  try {
    plan.validate();
  } catch (const Error& e) {
    fail("plan", e.what());
  }
  return plan;
}

PerturbationPlan random_analytic_plan(const std::map<std::string, ImageAnnotation>& gts,
                                      Rng& rng) {
  PerturbationPlan plan;
  plan.seed = rng.next();
  std::size_t reactions = 0;
  std::size_t relabelable = 0;
  for (const auto& [id, img] : gts) {
    reactions += img.reactions.size();
    for (const ReactionAnnotation& r : img.reactions) {
      for (int c : r.conditions) {
        const DetectedObject* o = img.find_object(c);
        if (o && o->cls == ObjectClass::Str) {
          ++relabelable;
          break;
        }
      }
    }
  }
  if (rng.bernoulli(0.5)) plan.steps.push_back(JitterBoxes{rng.uniform_real(0.0, 0.1)});
  if (rng.bernoulli(0.3)) {
    plan.steps.push_back(DuplicateReaction{0});
    reactions += gts.size();
  }
  if (relabelable > 0 && rng.bernoulli(0.6)) {
    int count = rng.uniform_int(1, static_cast<int>(relabelable));
    plan.steps.push_back(RelabelConditionAsReactant{count});
  }
  if (rng.bernoulli(0.7)) {
    plan.steps.push_back(DropReactions{rng.uniform_int(0, static_cast<int>(reactions))});
  }
  return plan;
}

}  // namespace rxnkit::perturb
