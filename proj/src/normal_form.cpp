#include "hlk/normal_form.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace hlk {

namespace {

HFPtr nnf_walk(const HFPtr& f, bool neg) {
  switch (f->kind) {
    case HKind::True:
      return neg ? h_false() : h_true();
    case HKind::False:
      return neg ? h_true() : h_false();
    case HKind::TraceAtom:
    case HKind::PropAtom:
    case HKind::TreePropAtom:
      return neg ? h_neg(f) : f;
    case HKind::Neg:
      return nnf_walk(f->kids[0], !neg);
    case HKind::And: {
      auto a = nnf_walk(f->kids[0], neg);
      auto b = nnf_walk(f->kids[1], neg);
      return neg ? h_or(a, b) : h_and(a, b);
    }
    case HKind::Or: {
      auto a = nnf_walk(f->kids[0], neg);
      auto b = nnf_walk(f->kids[1], neg);
      return neg ? h_and(a, b) : h_or(a, b);
    }
    case HKind::Implies: {
      // a -> b == !a | b
      auto a = nnf_walk(f->kids[0], !neg);
      auto b = nnf_walk(f->kids[1], neg);
      return neg ? h_and(a, b) : h_or(a, b);
    }
    case HKind::Iff: {
      // a <-> b == (a & b) | (!a & !b); negated: a <-> !b
      auto ap = nnf_walk(f->kids[0], false);
      auto an = nnf_walk(f->kids[0], true);
      auto bp = nnf_walk(f->kids[1], neg);
      auto bn = nnf_walk(f->kids[1], !neg);
      return h_or(h_and(ap, bp), h_and(an, bn));
    }
    case HKind::Next:
      return h_next(nnf_walk(f->kids[0], neg));
    case HKind::Until: {
      auto a = nnf_walk(f->kids[0], neg);
      auto b = nnf_walk(f->kids[1], neg);
      return neg ? h_release(a, b) : h_until(a, b);
    }
    case HKind::Release: {
      auto a = nnf_walk(f->kids[0], neg);
      auto b = nnf_walk(f->kids[1], neg);
      return neg ? h_until(a, b) : h_release(a, b);
    }
    case HKind::Eventually: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_globally(a) : h_eventually(a);
    }
    case HKind::Globally: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_eventually(a) : h_globally(a);
    }
    case HKind::ExistsTrace: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_forall_trace(f->var, a) : h_exists_trace(f->var, a);
    }
    case HKind::ForallTrace: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_exists_trace(f->var, a) : h_forall_trace(f->var, a);
    }
    case HKind::ExistsProp: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_forall_prop(f->name, a) : h_exists_prop(f->name, a);
    }
    case HKind::ForallProp: {
      auto a = nnf_walk(f->kids[0], neg);
      return neg ? h_exists_prop(f->name, a) : h_forall_prop(f->name, a);
    }
    case HKind::Knowledge: {
      // No dual operator in the AST; a negation stays on the K node and
      // the body is normalized positively.
      auto body = nnf_walk(f->kids[0], false);
      auto k = h_knowledge(f->obs, f->var, body);
      return neg ? h_neg(k) : k;
    }
  }
  return f;
}

bool nnf_check(const HFPtr& f) {
  if (f->kind == HKind::Neg) {
    HKind k = f->kids[0]->kind;
    if (!h_is_atom(k) && k != HKind::Knowledge) return false;
    if (k == HKind::Knowledge) return nnf_check(f->kids[0]->kids[0]);
    return true;
  }
  if (f->kind == HKind::Implies || f->kind == HKind::Iff) return false;
  for (const auto& k : f->kids)
    if (!nnf_check(k)) return false;
  return true;
}

RFPtr r_nnf_walk(const RFPtr& f, bool neg) {
  switch (f->kind) {
    case RKind::True:
      return neg ? r_false() : r_true();
    case RKind::False:
      return neg ? r_true() : r_false();
    case RKind::Pred:
    case RKind::InSet:
    case RKind::Eq:
    case RKind::Less:
    case RKind::EqualLevel:
      return neg ? r_neg(f) : f;
    case RKind::Neg:
      return r_nnf_walk(f->kids[0], !neg);
    case RKind::And: {
      auto a = r_nnf_walk(f->kids[0], neg);
      auto b = r_nnf_walk(f->kids[1], neg);
      return neg ? r_or(a, b) : r_and(a, b);
    }
    case RKind::Or: {
      auto a = r_nnf_walk(f->kids[0], neg);
      auto b = r_nnf_walk(f->kids[1], neg);
      return neg ? r_and(a, b) : r_or(a, b);
    }
    case RKind::Implies: {
      auto a = r_nnf_walk(f->kids[0], !neg);
      auto b = r_nnf_walk(f->kids[1], neg);
      return neg ? r_and(a, b) : r_or(a, b);
    }
    case RKind::Iff: {
      auto ap = r_nnf_walk(f->kids[0], false);
      auto an = r_nnf_walk(f->kids[0], true);
      auto bp = r_nnf_walk(f->kids[1], neg);
      auto bn = r_nnf_walk(f->kids[1], !neg);
      return r_or(r_and(ap, bp), r_and(an, bn));
    }
    case RKind::ExistsFO: {
      auto a = r_nnf_walk(f->kids[0], neg);
      return neg ? r_forall_fo(f->name, a) : r_exists_fo(f->name, a);
    }
    case RKind::ForallFO: {
      auto a = r_nnf_walk(f->kids[0], neg);
      return neg ? r_exists_fo(f->name, a) : r_forall_fo(f->name, a);
    }
    case RKind::ExistsSO: {
      auto a = r_nnf_walk(f->kids[0], neg);
      return neg ? r_forall_so(f->name, a) : r_exists_so(f->name, a);
    }
    case RKind::ForallSO: {
      auto a = r_nnf_walk(f->kids[0], neg);
      return neg ? r_exists_so(f->name, a) : r_forall_so(f->name, a);
    }
  }
  return f;
}

bool r_qfree(const RFPtr& f) {
  if (r_is_quantifier(f->kind)) return false;
  for (const auto& k : f->kids)
    if (!r_qfree(k)) return false;
  return true;
}

bool h_qfree(const HFPtr& f) {
  if (h_is_quantifier(f->kind)) return false;
  for (const auto& k : f->kids)
    if (!h_qfree(k)) return false;
  return true;
}

}  // namespace

HFPtr to_nnf(const HFPtr& f) { return nnf_walk(f, false); }

bool is_nnf(const HFPtr& f) { return nnf_check(f); }

RFPtr r_to_nnf(const RFPtr& f) { return r_nnf_walk(f, false); }

bool r_is_prenex(const RFPtr& f) {
  const RF* cur = f.get();
  while (r_is_quantifier(cur->kind)) cur = cur->kids[0].get();
  for (const auto& k : cur->kids)
    if (!r_qfree(k)) return false;
  return true;
}

bool h_is_prenex(const HFPtr& f) {
  const HF* cur = f.get();
  while (h_is_quantifier(cur->kind)) cur = cur->kids[0].get();
  for (const auto& k : cur->kids)
    if (!h_qfree(k)) return false;
  return true;
}

RFPtr r_prenex(const RFPtr& f) {
  auto g = r_to_nnf(f);
  // Hoist quantifiers over and/or one step at a time until fixpoint.
  // Bound names are distinct (parser invariant), so no capture arises.
  std::vector<std::pair<RKind, std::string>> prefix;
  std::function<RFPtr(const RFPtr&)> pull = [&](const RFPtr& h) -> RFPtr {
    if (r_is_quantifier(h->kind)) {
      prefix.emplace_back(h->kind, h->name);
      return pull(h->kids[0]);
    }
    if (h->kind == RKind::And || h->kind == RKind::Or) {
      auto a = pull(h->kids[0]);
      auto b = pull(h->kids[1]);
      return h->kind == RKind::And ? r_and(a, b) : r_or(a, b);
    }
    return h;
  };
  auto matrix = pull(g);
  RFPtr out = matrix;
  for (auto it = prefix.rbegin(); it != prefix.rend(); ++it)
    out = std::make_shared<RF>(RF{it->first, it->second, nullptr, nullptr,
                                  {out}});
  return out;
}

}  // namespace hlk
