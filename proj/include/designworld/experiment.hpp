#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "designworld/discourse.hpp"
#include "designworld/ks.hpp"
#include "designworld/task.hpp"

namespace designworld {

struct CostModel {
  double commcost = 1.0;
  double infcost = 1.0;
  double retcost = 0.01;
};

struct StrategyPair {
  StrategyKind agent_a = StrategyKind::AllImplicit;
  StrategyKind agent_b = StrategyKind::AllImplicit;
  friend bool operator==(const StrategyPair&, const StrategyPair&) = default;
};

std::string pair_label(const StrategyPair& pair);

struct ExperimentCell {
  StrategyPair pair;
  TaskVariant variant = TaskVariant::Standard;
  int radius = 16;  // 1..16
  CostModel costs;
  int n_dialogues = 100;  // >= 2, KS needs samples
  std::uint64_t seed = 0;
  WorldConfig world;
};

// Everything the reports need about one simulated dialogue.
struct DialogueStats {
  int raw = 0;
  long long messages = 0;
  long long inferences = 0;
  long long retrievals = 0;
  double performance = 0.0;
  double normalized = 0.0;
};

struct Distribution {
  std::vector<double> values;  // normalized performance, ordered by dialogue index
};

// raw score minus commcost*messages, infcost*inferences, retcost*retrievals,
// with counters summed over both agents. Unclamped.
double performance(int raw, const CostLedger& ledger_a, const CostLedger& ledger_b,
                   const CostModel& costs);

// Run one cell's dialogues once and score the records under several task
// variants; the variant touches only the scoring rule, never the dialogue,
// so the batch is shared. Indexed as result[variant index][dialogue index].
std::vector<std::vector<DialogueStats>> run_cell_variants(const ExperimentCell& cell,
                                                          const std::vector<TaskVariant>& variants,
                                                          int jobs = 1);

std::vector<DialogueStats> run_cell_stats(const ExperimentCell& cell, int jobs = 1);

Distribution run_cell(const ExperimentCell& cell, int jobs = 1);

// Replays a single dialogue of a cell; for transcript dumps and tests.
struct DialogueReplay {
  DialogueRecord record;
  WorldState world;
  DialogueStats stats;
};
DialogueReplay replay_dialogue(const ExperimentCell& cell, int dialogue_index);

enum class VerdictKind { Beneficial, Detrimental, Neither };

const char* verdict_name(VerdictKind v);

struct RadiusResult {
  int radius = 0;
  KSResult ks;
};

struct Verdict {
  VerdictKind kind = VerdictKind::Neither;
  bool mixed = false;  // both directions cleared the two-setting bar
  std::vector<RadiusResult> supporting;  // significant radii, ascending
};

// Beneficial needs two or more radii significant (p < alpha) in the positive
// direction, detrimental two or more negative; with both present the
// majority direction wins and the verdict is flagged mixed.
Verdict classify(const std::map<int, KSResult>& by_radius, double alpha = 0.05);

struct DifferencePoint {
  int radius = 0;
  double mean_diff = 0.0;
  KSResult ks;
};

// Per radius: mean(A) - mean(B) and the KS comparison, ordered by radius.
// Throws std::invalid_argument when the radius sets differ.
std::vector<DifferencePoint> difference_series(const std::map<int, Distribution>& a,
                                               const std::map<int, Distribution>& b);

}  // namespace designworld
