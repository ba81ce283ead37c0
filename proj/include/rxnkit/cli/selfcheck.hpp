#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rxnkit/core/annotation_json.hpp"

namespace rxnkit::cli {

struct SelfcheckOptions {
  std::uint64_t seed = 42;
  int images = 100;
  int plans = 20;
};

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Generates a corpus in memory and cross-checks the metrics against the
// closed-form expectations of random analytic perturbation plans, plus the
// identity and grammar round-trip properties.
std::vector<Check> run_selfcheck(const SelfcheckOptions& options);

Json checks_to_json(const std::vector<Check>& checks);

}  // namespace rxnkit::cli
