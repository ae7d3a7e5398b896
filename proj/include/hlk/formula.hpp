#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "hlk/logics.hpp"

namespace hlk {

// Unified AST for the temporal-style logics. One node type serves
// LTL through HyperKCTL*; the LogicId on the enclosing Formula decides
// which node kinds are admissible.
enum class HKind {
  True,
  False,
  TraceAtom,     // a[pi]
  PropAtom,      // q (quantified or, in (Q)PTL, free)
  TreePropAtom,  // q[pi] under HyperQCTL*
  Neg,
  And,
  Or,
  Implies,
  Iff,
  Next,
  Until,
  Release,
  Eventually,
  Globally,
  ExistsTrace,
  ForallTrace,
  ExistsProp,
  ForallProp,
  Knowledge,  // K[A; pi]
};

struct HF;
using HFPtr = std::shared_ptr<const HF>;

struct HF {
  HKind kind;
  std::string name;               // ap / prop / quantified variable
  std::string var;                // trace/path variable of atoms, quantifiers, K
  std::vector<std::string> obs;   // observation set A of K
  std::vector<HFPtr> kids;

  HF(HKind k, std::string n, std::string v, std::vector<std::string> o,
     std::vector<HFPtr> c)
      : kind(k), name(std::move(n)), var(std::move(v)), obs(std::move(o)),
        kids(std::move(c)) {}
};

HFPtr h_true();
HFPtr h_false();
HFPtr h_atom(std::string ap, std::string pi);       // a[pi]
HFPtr h_prop(std::string q);                        // q
HFPtr h_tree_prop(std::string q, std::string pi);   // q[pi]
HFPtr h_neg(HFPtr f);
HFPtr h_and(HFPtr a, HFPtr b);
HFPtr h_or(HFPtr a, HFPtr b);
HFPtr h_implies(HFPtr a, HFPtr b);
HFPtr h_iff(HFPtr a, HFPtr b);
HFPtr h_next(HFPtr f);
HFPtr h_until(HFPtr a, HFPtr b);
HFPtr h_release(HFPtr a, HFPtr b);
HFPtr h_eventually(HFPtr f);
HFPtr h_globally(HFPtr f);
HFPtr h_exists_trace(std::string pi, HFPtr f);
HFPtr h_forall_trace(std::string pi, HFPtr f);
HFPtr h_exists_prop(std::string q, HFPtr f);
HFPtr h_forall_prop(std::string q, HFPtr f);
HFPtr h_knowledge(std::vector<std::string> obs, std::string pi, HFPtr f);

// n-ary conjunction/disjunction helpers (right-nested; empty -> true/false).
HFPtr h_and_all(const std::vector<HFPtr>& fs);
HFPtr h_or_all(const std::vector<HFPtr>& fs);

bool h_equal(const HFPtr& a, const HFPtr& b);
std::size_t h_size(const HFPtr& f);

constexpr bool h_is_quantifier(HKind k) {
  return k == HKind::ExistsTrace || k == HKind::ForallTrace ||
         k == HKind::ExistsProp || k == HKind::ForallProp;
}

constexpr bool h_is_atom(HKind k) {
  return k == HKind::True || k == HKind::False || k == HKind::TraceAtom ||
         k == HKind::PropAtom || k == HKind::TreePropAtom;
}

// A formula is an AST plus its logic tag. ASTs are immutable and shared.
struct Formula {
  LogicId logic;
  HFPtr root;
};

struct FreeVars {
  std::set<std::string> trace;  // trace/path variables
  std::set<std::string> prop;   // propositional variables
  std::set<std::string> fo;     // first-order variables
  std::set<std::string> so;     // second-order variables
};

FreeVars free_variables(const HFPtr& f);

// Atomic propositions mentioned by trace atoms / free prop atoms.
std::set<std::string> atomic_propositions(const HFPtr& f);

// Bound variables renamed to v1, v2, ... in traversal order; alpha-equal
// formulas normalize to structurally equal trees.
HFPtr alpha_normalize(const HFPtr& f);
bool alpha_equal(const HFPtr& a, const HFPtr& b);

// Checks the LogicId-driven well-formedness rules; returns an error
// message or std::nullopt.
std::optional<std::string> check_well_formed(LogicId logic, const HFPtr& f);

}  // namespace hlk
