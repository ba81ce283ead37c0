#include "rxnkit/grammar/instruction.hpp"

#include "rxnkit/core/errors.hpp"

namespace rxnkit::grammar {

namespace {

// "{image}" and "{region}" are substituted; everything else is emitted as is.
constexpr std::string_view kComponentTemplate =
    "Please list every reaction in this image{image} in detail. For each reaction, include the "
    "category and unique ID of each object, along with their coordinates [x1, y1, x2, y2]. "
    "Categories include Structure ([Str]) and Text ([Txt]). Describe their roles in each "
    "reaction ([Rxn/st] to [Rxn/ed]), including Reactants ([Rct/st] to [Rct/ed]), Conditions "
    "([Cnd/st] to [Cnd/ed]), and Products ([Prd/st] to [Prd/ed]). Note that Reactants and "
    "Products must include at least one object, while Conditions can be specified without any "
    "objects. Structured output format should be: [Rxn/st][Rct/st](object 1)...[Rct/ed][Cnd/st]"
    "(object 2)...[Cnd/ed][Prd/st](object 3)...[Prd/ed][Rxn/ed],[Rxn/st].... Only the "
    "Conditions section can be empty (i.e., [Cnd/st][Cnd/ed] without anything between).";

constexpr std::string_view kConditionTemplate =
    "For the given image{image}, what words are written in this text box{region}. And please "
    "indicate the condition role[Role] of each word in: solvent[Svt], agent[Agt], "
    "temperature[Tem], time [Time] and yield[Yld]. Structured output format should be:'Text "
    "content'[Role],....";

std::string fill(std::string_view tmpl, std::string_view image, std::string_view region) {
  std::string out;
  std::size_t i = 0;
  while (i < tmpl.size()) {
    if (tmpl.substr(i).starts_with("{image}")) {
      out += image;
      i += 7;
    } else if (tmpl.substr(i).starts_with("{region}")) {
      out += region;
      i += 8;
    } else {
      out += tmpl[i++];
    }
  }
  return out;
}

}  // namespace

std::string build_instruction(Task task, std::string_view image_placeholder,
                              std::optional<std::string_view> region_placeholder) {
  if (task == Task::ComponentId) return fill(kComponentTemplate, image_placeholder, {});
  if (!region_placeholder) {
    throw Error(ErrorCode::InvalidArgument,
                "the condition interpretation instruction needs a region placeholder");
  }
  return fill(kConditionTemplate, image_placeholder, *region_placeholder);
}

}  // namespace rxnkit::grammar
