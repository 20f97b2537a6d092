#pragma once

// Property and oracle checks at pinned desk-scale parameters, grouped into
// suites. Used by `qcs verify <suite>` and by the acceptance runner.

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qcs/executor.hpp"
#include "qcs/resonance.hpp"

namespace qcs {

enum class Suite { Arith, Charsum, MeanValue, Resonance, Gcd };

Suite parse_suite(std::string_view name);
std::string_view to_string(Suite suite);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<CheckResult> run_suite(Suite suite, const Executor& executor = Executor{});

// Twenty fixed resonator configurations with X <= 10^4 and x <= 100 covering
// all three variants and both moment forms.
struct PinnedResonance {
  std::string label;
  std::function<ResonatorSpec()> build;
  bool squared;
};

const std::vector<PinnedResonance>& pinned_resonance_configs();

}  // namespace qcs
