#pragma once

#include <string>
#include <vector>

#include "hlk/buchi.hpp"
#include "hlk/formula.hpp"

namespace hlk {

// Tableau translation of a quantifier-free temporal formula into an NBA.
// Trace-indexed atoms a[pi] become vocabulary entries "a@pi"; bare
// propositions stay as-is. The vocabulary may list extra propositions the
// formula does not mention. Throws std::invalid_argument on quantifiers.
Buchi ltl_to_nba(const HFPtr& f, const std::vector<std::string>& vocabulary);

// Vocabulary inferred from the formula's atoms.
Buchi ltl_to_nba(const HFPtr& f);

std::string atom_prop_name(const std::string& ap, const std::string& var);

// The pair/triple automata of the comb construction: letters are tuples
// of node labels, one slot per path variable, encoded as a@<slot>.
// `slots` maps path-variable names to slot tags.
Buchi tuple_automaton(const HFPtr& quantifierFree,
                      const std::vector<std::pair<std::string, std::string>>&
                          slots,
                      const std::vector<std::string>& aps);

// Unconditionally accepting single-state automaton over the same
// vocabulary shape.
Buchi top_automaton(const std::vector<std::string>& vocab);

}  // namespace hlk
