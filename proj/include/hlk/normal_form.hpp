#pragma once

#include "hlk/formula.hpp"
#include "hlk/relational.hpp"

namespace hlk {

// Negation normal form: negations only on atoms (knowledge operators act
// as literal barriers: a negation may rest directly on a K node, whose
// body is normalized positively). Implications and equivalences are
// expanded. Dualities: !(a U b) = !a R !b, !X a = X !a, !F a = G !a,
// !exists = forall !, !exists q = forall q !.
HFPtr to_nnf(const HFPtr& f);

// True if negations occur only directly on atoms (or K nodes).
bool is_nnf(const HFPtr& f);

// Relational counterpart (used to prenex FO[<,E]/MSO[E] inputs).
RFPtr r_to_nnf(const RFPtr& f);

// Prenex check for relational formulas: a quantifier prefix followed by a
// quantifier-free matrix.
bool r_is_prenex(const RFPtr& f);

// Prenex check for temporal formulas.
bool h_is_prenex(const HFPtr& f);

// Moves all quantifiers of an NNF-convertible relational formula to the
// front (capture-avoiding; bound names are already distinct from parsing).
RFPtr r_prenex(const RFPtr& f);

}  // namespace hlk
