#pragma once

#include <optional>
#include <string>
#include <vector>

#include "designworld/awm.hpp"

namespace designworld {

enum class Room { Room1, Room2 };

const char* room_name(Room r);

struct FurnitureItem {
  std::string id;  // unique world-wide, e.g. "green-rug-3"
  std::string kind;
  std::string color;
  int points = 0;  // > 0
};

struct PutAct {
  std::string actor;
  std::string item;
  Room room = Room::Room1;
  friend bool operator==(const PutAct&, const PutAct&) = default;
};

struct Option {
  int id = 0;  // unique within a dialogue
  PutAct act;
  friend bool operator==(const Option&, const Option&) = default;
};

// Hands out dialogue-unique option ids.
struct OptionIdSource {
  int next = 1;
  int take() { return next++; }
};

enum class StrategyKind { AllImplicit, CloseConsequence, ExplicitWarrant };

const char* strategy_name(StrategyKind s);

struct CostLedger {
  long long messages = 0;
  long long inferences = 0;
  long long retrievals = 0;
};

struct OpenProposal {
  Option option;
  std::string proposer;
};

// Per-dialogue discourse bookkeeping: the open proposal, the warrant passed
// along with it (usable without a memory search while the exchange is
// live), contents already floated in the current exchange (blocks proposal
// cycles), and the room under negotiation.
struct DiscourseState {
  std::optional<OpenProposal> open_proposal;
  std::optional<std::pair<std::string, int>> context_score;  // (item, points)
  std::vector<PutAct> exchange_history;
  std::optional<Option> implicitly_accepted;  // own proposal settled by the partner's counter-move
  Room current_room = Room::Room1;
};

struct AgentState {
  std::string name;
  MemoryStore memory;
  StrategyKind strategy = StrategyKind::AllImplicit;
  CostLedger ledger;
  DiscourseState pending;
};

struct Decision {
  Option option;
  int utility = 0;
};

struct Evaluation {
  bool accept = true;
  std::optional<Decision> counter;  // present iff rejected
};

// One option per salient has(agent, item) belief, minus items whose
// not-has(agent, item) is also salient. Two pattern searches, both charged.
std::vector<Option> generate_options(AgentState& agent, Room room, OptionIdSource& ids);

// Points of the salient score(item, _) belief, 0 if none; search charged.
int utility(AgentState& agent, const Option& opt);

// Highest-utility option; ties go to the lexicographically smallest item id.
std::optional<Decision> deliberate(AgentState& agent, const std::vector<Option>& options);

// Accept unless some own salient option beats the proposal strictly. The
// proposal's worth comes from the exchange context when a warrant was just
// communicated, otherwise from a charged memory search. Candidate counters
// exclude contents already floated in this exchange.
Evaluation evaluate_proposal(AgentState& agent, const Option& proposal, OptionIdSource& ids);

// Derive not-has(actor, item) from a mutually accepted step, store it, and
// charge one inference.
Proposition act_effect_inference(AgentState& agent, const Option& step, SeededGenerator& rng);

}  // namespace designworld
