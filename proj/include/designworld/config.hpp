#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "designworld/experiment.hpp"

namespace designworld {

struct ComparisonSpec {
  StrategyPair pair1;  // strategy under study, agent A holds the marked strategy
  StrategyPair pair2;  // baseline
  TaskVariant variant = TaskVariant::Standard;
};

struct SuiteConfig {
  std::vector<ComparisonSpec> comparisons;
  CostModel costs;
  int radius_lo = 1;
  int radius_hi = 16;
  int n_dialogues = 100;
  std::uint64_t seed = 0;
  WorldConfig world;
  std::string output_dir = "out";
};

// A bad or unparsable configuration; `line` is 0 when no line applies.
struct ConfigError : std::runtime_error {
  int line;
  explicit ConfigError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
};

// File-level failures (missing config, unwritable outputs).
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

StrategyKind parse_strategy(const std::string& name);        // throws ConfigError
StrategyPair parse_strategy_pair(const std::string& text);   // "X+Y"
TaskVariant parse_variant(const std::string& name);

// Flat key = value lines with repeated [comparison] blocks; '#' comments.
// Unknown keys are rejected with their line number; omitted optional keys
// take the defaults above.
SuiteConfig load_config(const std::string& path);

SuiteConfig parse_config_text(const std::string& text);

void validate_config(const SuiteConfig& cfg);  // throws ConfigError

}  // namespace designworld
