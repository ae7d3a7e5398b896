#pragma once

#include <cstddef>

#include "hlk/buchi.hpp"
#include "hlk/formula.hpp"
#include "hlk/models.hpp"

namespace hlk {

// Direct LTL evaluation on a lasso word, by the textbook satisfaction
// relation with the loop handled by position normalization. Trace atoms
// a[pi] read the proposition "a@pi" from the word's letters.
bool eval_ltl_lasso(const HFPtr& quantifierFree, const LassoTrace& w,
                    std::size_t pos = 0);

// Automata-based semantics for the linear-time logics. Trace quantifiers
// enumerate T; propositional quantifiers become projection (and
// complement-projection-complement); the remainder goes through the LTL
// tableau and a membership test of the zipped traces. Exact; throws
// CapExceeded when complementation exceeds the state cap.
// LTL/QPTL formulas are checked per trace (T satisfies iff every member
// trace does).
bool eval_linear(const Formula& f, const TraceSet& T);

// Bounds for the naive evaluator's propositional-quantifier search:
// candidate q-labelings are lassos with prefix length <= qPrefixMax and
// loop length <= qLoopMax.
struct NaiveBounds {
  std::size_t qPrefixMax = 2;
  std::size_t qLoopMax = 4;
};

// Independent oracle: direct enumeration of the satisfaction relation on
// lasso unrollings, with propositional quantifiers searched over bounded
// lasso labelings. Sound on corpora whose witnesses exist at that size
// (cross-checked against the automata route).
bool eval_linear_naive(const Formula& f, const TraceSet& T,
                       const NaiveBounds& bounds = {});

}  // namespace hlk
