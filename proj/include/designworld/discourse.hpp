#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "designworld/agent.hpp"

namespace designworld {

enum class ActKind { Propose, Accept, Reject, Say, Close, Open };

const char* act_kind_name(ActKind k);

// One utterance in the artificial act language. propose/accept/reject/close
// carry an option; say carries a belief; open carries only the room marker.
struct CommunicativeAct {
  ActKind kind = ActKind::Propose;
  std::string speaker;
  std::string addressee;
  std::optional<Option> option;
  std::optional<Proposition> belief;
  std::optional<Room> room;

  friend bool operator==(const CommunicativeAct&, const CommunicativeAct&) = default;
};

// One act per line, e.g.
//   (propose agent-a agent-b option-7 (put-act agent-a green-rug-3 room-1))
std::string to_sexpr(const CommunicativeAct& act);

struct ProtocolError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Proposal discourse act. Explicit-Warrant prefixes the proposal with its
// warrant when the speaker has one salient (utility_value > 0 from the
// speaker's deliberation); otherwise the proposal goes out bare.
std::vector<CommunicativeAct> compose_proposal(StrategyKind strategy, const Option& opt,
                                               int utility_value, const std::string& speaker,
                                               const std::string& addressee);

// Rejection-with-counter discourse act; same warrant rule as proposals.
std::vector<CommunicativeAct> compose_counter(StrategyKind strategy, const Option& counter,
                                              int utility_value, const std::string& speaker,
                                              const std::string& addressee);

// Closing discourse act for a settled step. Close-Consequence closes
// explicitly and rehearses the act effect; the other strategies leave the
// closing implicit.
std::vector<CommunicativeAct> compose_closing(StrategyKind strategy, const Option& settled,
                                              const std::string& speaker,
                                              const std::string& addressee);

// Apply an act to the addressee: store its content propositions (a warrant
// say refreshes salience even when the fact is already known) and update the
// discourse bookkeeping. Throws ProtocolError on a misaddressed act.
void receive(AgentState& agent, const CommunicativeAct& act, SeededGenerator& rng);

struct AgreedStep {
  Option option;
  bool warrant_salient_a = false;  // score belief within agent A's radius at acceptance
  bool warrant_salient_b = false;
};

struct DialogueRecord {
  std::vector<AgreedStep> agreed_steps;
  std::vector<CommunicativeAct> transcript;
  CostLedger ledger_a;
  CostLedger ledger_b;

  // Charged acts only; open markers carry no cost.
  long long message_count() const;
};

// One complete negotiation: room-1 then room-2, four steps per room unless
// both sides run out of options first. Agent a holds the first turn.
DialogueRecord run_dialogue(AgentState& a, AgentState& b, SeededGenerator& rng);

}  // namespace designworld
