#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "designworld/rng.hpp"

namespace designworld {

// Attention/working memory: a cubic torus of loci. Propositions are written
// in chronological order at a pointer that random-walks one axis step per
// write. Retrieval searches a sphere of a given radius around the pointer;
// the radius is the agent's attentional capacity. Items written more than
// once occupy several loci, so recency and frequency both raise the chance
// of retrieval.

struct Locus {
  int x = 0;
  int y = 0;
  int z = 0;
  friend bool operator==(const Locus&, const Locus&) = default;
};

// Reduce raw coordinates into [0, size).
Locus wrap_locus(int x, int y, int z, int size);

// Euclidean distance with per-axis wrap-around displacement
// min(|ai-bi|, size-|ai-bi|).
double torus_distance(const Locus& a, const Locus& b, int size);

// Integer square of the same distance; exact, used for radius tests.
int torus_distance_sq(const Locus& a, const Locus& b, int size);

// All loci within `radius` of `center`, center included.
std::vector<Locus> salient_loci(const Locus& center, int radius, int size);

enum class Predicate { Has, NotHas, Score, Put, Agreed, Close };

const char* predicate_name(Predicate p);
int predicate_arity(Predicate p);

using Arg = std::variant<std::string, int>;

std::string arg_text(const Arg& a);

struct Proposition {
  Predicate pred;
  std::vector<Arg> args;  // arity fixed per predicate

  friend bool operator==(const Proposition&, const Proposition&) = default;

  static Proposition has(std::string agent, std::string item);
  static Proposition not_has(std::string agent, std::string item);
  static Proposition score(std::string item, int points);
  static Proposition put(std::string actor, std::string item, std::string room);
  static Proposition agreed(std::string actor, std::string item, std::string room);
  static Proposition close(std::string actor, std::string item, std::string room);

  std::string text() const;  // s-expression body, e.g. "(score rug-1 56)"
};

// Predicate plus per-position args where nullopt is a wildcard.
struct PropositionPattern {
  Predicate pred;
  std::vector<std::optional<Arg>> args;

  bool matches(const Proposition& p) const;

  static PropositionPattern exact(const Proposition& p);
  static PropositionPattern any(Predicate pred);
  static PropositionPattern of(Predicate pred, std::vector<std::optional<Arg>> args);
};

struct RetrievalResult {
  std::vector<Proposition> matches;  // ordered by (distance from pointer, storage order)
  int probes = 0;                    // loci searched = sphere cardinality
};

struct SalienceResult {
  bool salient = false;
  int probes = 0;
};

class MemoryStore {
 public:
  explicit MemoryStore(int size = 16, int radius = 16);

  int size() const { return size_; }
  int radius() const { return radius_; }
  void set_radius(int radius);

  const Locus& pointer() const { return pointer_; }
  const std::vector<std::pair<Locus, Proposition>>& chronology() const { return chronology_; }
  const std::vector<Proposition>& cell(const Locus& at) const;

  // Write at the pointer, then advance the pointer to a uniformly chosen
  // axis neighbour. Duplicate writes keep every copy.
  void store(const Proposition& p, SeededGenerator& rng);

  RetrievalResult retrieve(const PropositionPattern& pattern, int radius) const;
  RetrievalResult retrieve(const PropositionPattern& pattern) const { return retrieve(pattern, radius_); }
  SalienceResult is_salient(const PropositionPattern& pattern, int radius) const;
  SalienceResult is_salient(const PropositionPattern& pattern) const { return is_salient(pattern, radius_); }

  // Query without touching the probe meter. For instrumentation/scoring,
  // not agent reasoning.
  bool contains(const PropositionPattern& pattern, int radius) const;

  // Loci count of one search sphere at this store's grid size.
  int sphere_cardinality(int radius) const;

  // Sum of probes over all retrieve/is_salient calls; lets callers audit
  // that every search they issued was charged somewhere.
  long long probes_issued() const { return probes_issued_; }

 private:
  std::size_t index_of(const Locus& at) const;

  int size_;
  int radius_;
  Locus pointer_;
  std::vector<std::vector<Proposition>> cells_;
  std::vector<std::pair<Locus, Proposition>> chronology_;
  std::vector<int> sphere_card_;  // by radius, 0..max usable
  mutable long long probes_issued_ = 0;
};

}  // namespace designworld
