#pragma once

#include <map>
#include <string>

#include "hlk/models.hpp"
#include "hlk/relational.hpp"

namespace hlk {

// Finite description of a subset of T x N: per trace, membership bits for
// the trace's prefix positions and for one pass of its loop.
struct SOValuation {
  struct PerTrace {
    std::vector<bool> prefix;  // aligned with the trace's prefix
    std::vector<bool> loop;    // aligned with the trace's loop
  };
  std::vector<PerTrace> per;

  bool contains(const TraceSet& T, std::size_t traceIdx,
                std::size_t pos) const;
};

struct FOValuation {
  std::size_t traceIdx;
  std::size_t pos;
};

// Automata-based semantics for FO[<,E] and S1S[E] over a trace set.
// First-order variables compile to (enumerated trace index, exactly-once
// position marker); second-order variables to one marker track per trace;
// quantifiers to projection/complementation. Free X_a variables read the
// trace propositions directly. Exact; throws CapExceeded when the
// complementation cap is hit. `fixedSO`/`fixedFO` pre-assign free
// variables (test and verification hook).
bool eval_relational_linear(
    const RFormula& f, const TraceSet& T,
    const std::map<std::string, SOValuation>& fixedSO = {},
    const std::map<std::string, FOValuation>& fixedFO = {});

}  // namespace hlk
