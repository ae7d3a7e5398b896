#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hlk/models.hpp"

namespace hlk {

// Thrown when a construction would exceed the configured state cap
// (complementation blow-up). Never silently truncated.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A propositional constraint over an ordered vocabulary, stored as the
// exact set of satisfying valuations (minterms). Vocabularies stay small
// (a handful of a@pi entries), so this is both exact and cheap.
class Constraint {
 public:
  Constraint() = default;
  explicit Constraint(int nprops, bool all = false);

  static Constraint none(int nprops) { return Constraint(nprops, false); }
  static Constraint all(int nprops) { return Constraint(nprops, true); }
  // Cube: pos/neg literal indices; others free.
  static Constraint cube(int nprops, const std::vector<int>& pos,
                         const std::vector<int>& neg);
  static Constraint of_minterm(int nprops, std::uint32_t m);

  int props() const { return nprops_; }
  std::uint64_t minterm_count() const;
  bool sat() const;
  bool is_all() const;
  bool test(std::uint32_t minterm) const;
  void set(std::uint32_t minterm, bool v);

  Constraint operator&(const Constraint& o) const;
  Constraint operator|(const Constraint& o) const;
  Constraint operator~() const;
  bool operator==(const Constraint& o) const;
  const std::vector<std::uint64_t>& raw() const { return bits_; }

  // Existentially eliminates prop k: result ranges over nprops-1 props
  // (indices above k shift down).
  Constraint project_out(int k) const;

  // Remaps into a larger vocabulary: map[i] = new index of old prop i.
  Constraint lift(const std::vector<int>& map, int newN) const;

  std::optional<std::uint32_t> some_minterm() const;

 private:
  int nprops_ = 0;
  std::vector<std::uint64_t> bits_;
  std::size_t words() const { return bits_.size(); }
};

// Nondeterministic Buchi automaton over a symbolic propositional alphabet.
struct Buchi {
  struct Edge {
    Constraint guard;
    int dst;
  };
  std::vector<std::string> vocab;      // ordered proposition names
  int init = 0;
  std::vector<std::vector<Edge>> edges;  // per state
  std::vector<bool> accepting;

  int states() const { return static_cast<int>(edges.size()); }
  int add_state(bool acc = false);
  void add_edge(int src, Constraint c, int dst);
  int prop_index(const std::string& name) const;

  // delta(q, m) as a state list.
  std::vector<int> step(int q, std::uint32_t minterm) const;
  bool has_edge(int q, std::uint32_t minterm, int q2) const;
};

Buchi universal_automaton(std::vector<std::string> vocab);
Buchi empty_automaton(std::vector<std::string> vocab);

// Rewrites both automata over the union vocabulary.
void align_vocab(Buchi& a, Buchi& b);
Buchi pad_vocab(const Buchi& a, const std::vector<std::string>& newVocab);

Buchi intersect(const Buchi& a, const Buchi& b);
Buchi union_(const Buchi& a, const Buchi& b);
Buchi project(const Buchi& a, const std::string& q);

// Rank-based complementation. Refuses inputs larger than `stateCap`
// states (default from HLK_STATE_CAP or 6) and results larger than
// `resultCap` states.
Buchi complement(const Buchi& a, int stateCap = -1, int resultCap = 400000);

int default_state_cap();

// Removes states that are unreachable or cannot reach an accepting cycle.
Buchi trim(const Buchi& a);

// Emptiness certificate: an accepting lasso run.
struct LassoWitness {
  std::vector<Letter> stem;
  std::vector<Letter> cycle;
  std::vector<int> stemRun;   // states before each stem letter
  std::vector<int> cycleRun;  // states before each cycle letter
};

std::optional<LassoWitness> is_empty(const Buchi& a);

// Independent re-validation of a witness (transition-by-transition,
// acceptance on the cycle, cycle closure).
bool check_witness(const Buchi& a, const LassoWitness& w);

LassoTrace witness_trace(const LassoWitness& w);

bool membership(const LassoTrace& w, const Buchi& a);

std::uint32_t letter_minterm(const Buchi& a, const Letter& l);

// Debug/golden dump: init/accepting headers plus one line per transition
// "src --[constraint]--> dst".
std::string dump(const Buchi& a);
std::string format_constraint(const Constraint& c,
                              const std::vector<std::string>& vocab);

// Generalized acceptance helper used by the LTL tableau and products.
struct GenBuchi {
  std::vector<std::string> vocab;
  int init = 0;
  std::vector<std::vector<Buchi::Edge>> edges;
  std::vector<std::vector<bool>> acceptSets;  // per set: per state
};

Buchi degeneralize(const GenBuchi& g);

}  // namespace hlk
