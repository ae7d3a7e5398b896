#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hlk/logics.hpp"

namespace hlk {

// Terms of the predicate-style logics. min(x) and S(t) are S1S[E]-only.
enum class TKind { Var, Min, Succ };

struct RTerm;
using RTermPtr = std::shared_ptr<const RTerm>;

struct RTerm {
  TKind kind;
  std::string var;   // Var / Min
  RTermPtr child;    // Succ
};

RTermPtr t_var(std::string x);
RTermPtr t_min(std::string x);
RTermPtr t_succ(RTermPtr t);

// Base variable of a term and the number of S() applications around it.
struct TermShape {
  std::string base;   // variable name
  bool from_min;      // base wrapped in min()
  int offset;         // # of S()
};
TermShape term_shape(const RTermPtr& t);

bool t_equal(const RTermPtr& a, const RTermPtr& b);

// Unified AST for FO[<,E], S1S[E], MPL[E], MSO[E].
enum class RKind {
  True,
  False,
  Pred,        // P_a(t)
  InSet,       // t in X
  Eq,          // t = t
  Less,        // t < t
  EqualLevel,  // E(t, t)
  Neg,
  And,
  Or,
  Implies,
  Iff,
  ExistsFO,
  ForallFO,
  ExistsSO,
  ForallSO,
};

struct RF;
using RFPtr = std::shared_ptr<const RF>;

struct RF {
  RKind kind;
  std::string name;       // predicate ap / set variable / quantified variable
  RTermPtr t1, t2;
  std::vector<RFPtr> kids;
};

RFPtr r_true();
RFPtr r_false();
RFPtr r_pred(std::string ap, RTermPtr t);
RFPtr r_in(RTermPtr t, std::string X);
RFPtr r_eq(RTermPtr a, RTermPtr b);
RFPtr r_less(RTermPtr a, RTermPtr b);
RFPtr r_eqlevel(RTermPtr a, RTermPtr b);
RFPtr r_neg(RFPtr f);
RFPtr r_and(RFPtr a, RFPtr b);
RFPtr r_or(RFPtr a, RFPtr b);
RFPtr r_implies(RFPtr a, RFPtr b);
RFPtr r_iff(RFPtr a, RFPtr b);
RFPtr r_exists_fo(std::string x, RFPtr f);
RFPtr r_forall_fo(std::string x, RFPtr f);
RFPtr r_exists_so(std::string X, RFPtr f);
RFPtr r_forall_so(std::string X, RFPtr f);
RFPtr r_and_all(const std::vector<RFPtr>& fs);
RFPtr r_or_all(const std::vector<RFPtr>& fs);

bool r_equal(const RFPtr& a, const RFPtr& b);
std::size_t r_size(const RFPtr& f);

constexpr bool r_is_quantifier(RKind k) {
  return k == RKind::ExistsFO || k == RKind::ForallFO ||
         k == RKind::ExistsSO || k == RKind::ForallSO;
}

constexpr bool r_is_atom(RKind k) {
  return k == RKind::True || k == RKind::False || k == RKind::Pred ||
         k == RKind::InSet || k == RKind::Eq || k == RKind::Less ||
         k == RKind::EqualLevel;
}

struct RFormula {
  LogicId logic;
  RFPtr root;
};

// Free FO variables and free SO variables.
struct RFreeVars {
  std::set<std::string> fo;
  std::set<std::string> so;
};
RFreeVars r_free_variables(const RFPtr& f);

// Atomic propositions: P_a predicates plus X_a-style free set variables.
std::set<std::string> r_atomic_propositions(const RFPtr& f);

// A closed S1S[E] formula has only free SO variables of the form X_a.
bool s1se_closed(const RFPtr& f);

RFPtr r_alpha_normalize(const RFPtr& f);
bool r_alpha_equal(const RFPtr& a, const RFPtr& b);

std::optional<std::string> r_check_well_formed(LogicId logic, const RFPtr& f);

}  // namespace hlk
