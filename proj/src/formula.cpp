#include "hlk/formula.hpp"

#include <algorithm>
#include <map>

namespace hlk {

namespace {
HFPtr mk(HKind k, std::string n = {}, std::string v = {},
         std::vector<std::string> o = {}, std::vector<HFPtr> c = {}) {
  return std::make_shared<HF>(k, std::move(n), std::move(v), std::move(o),
                              std::move(c));
}
}  // namespace

HFPtr h_true() { return mk(HKind::True); }
HFPtr h_false() { return mk(HKind::False); }
HFPtr h_atom(std::string ap, std::string pi) {
  return mk(HKind::TraceAtom, std::move(ap), std::move(pi));
}
HFPtr h_prop(std::string q) { return mk(HKind::PropAtom, std::move(q)); }
HFPtr h_tree_prop(std::string q, std::string pi) {
  return mk(HKind::TreePropAtom, std::move(q), std::move(pi));
}
HFPtr h_neg(HFPtr f) { return mk(HKind::Neg, {}, {}, {}, {std::move(f)}); }
HFPtr h_and(HFPtr a, HFPtr b) {
  return mk(HKind::And, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_or(HFPtr a, HFPtr b) {
  return mk(HKind::Or, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_implies(HFPtr a, HFPtr b) {
  return mk(HKind::Implies, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_iff(HFPtr a, HFPtr b) {
  return mk(HKind::Iff, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_next(HFPtr f) { return mk(HKind::Next, {}, {}, {}, {std::move(f)}); }
HFPtr h_until(HFPtr a, HFPtr b) {
  return mk(HKind::Until, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_release(HFPtr a, HFPtr b) {
  return mk(HKind::Release, {}, {}, {}, {std::move(a), std::move(b)});
}
HFPtr h_eventually(HFPtr f) {
  return mk(HKind::Eventually, {}, {}, {}, {std::move(f)});
}
HFPtr h_globally(HFPtr f) {
  return mk(HKind::Globally, {}, {}, {}, {std::move(f)});
}
HFPtr h_exists_trace(std::string pi, HFPtr f) {
  return mk(HKind::ExistsTrace, {}, std::move(pi), {}, {std::move(f)});
}
HFPtr h_forall_trace(std::string pi, HFPtr f) {
  return mk(HKind::ForallTrace, {}, std::move(pi), {}, {std::move(f)});
}
HFPtr h_exists_prop(std::string q, HFPtr f) {
  return mk(HKind::ExistsProp, std::move(q), {}, {}, {std::move(f)});
}
HFPtr h_forall_prop(std::string q, HFPtr f) {
  return mk(HKind::ForallProp, std::move(q), {}, {}, {std::move(f)});
}
HFPtr h_knowledge(std::vector<std::string> obs, std::string pi, HFPtr f) {
  return mk(HKind::Knowledge, {}, std::move(pi), std::move(obs),
            {std::move(f)});
}

HFPtr h_and_all(const std::vector<HFPtr>& fs) {
  if (fs.empty()) return h_true();
  HFPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = h_and(*it, acc);
  return acc;
}

HFPtr h_or_all(const std::vector<HFPtr>& fs) {
  if (fs.empty()) return h_false();
  HFPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = h_or(*it, acc);
  return acc;
}

bool h_equal(const HFPtr& a, const HFPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->var != b->var ||
      a->obs != b->obs || a->kids.size() != b->kids.size())
    return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!h_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

std::size_t h_size(const HFPtr& f) {
  std::size_t n = 1;
  for (const auto& k : f->kids) n += h_size(k);
  return n;
}

namespace {

void collect_free(const HFPtr& f, std::map<std::string, int>& traceBound,
                  std::map<std::string, int>& propBound, FreeVars& out) {
  switch (f->kind) {
    case HKind::TraceAtom:
      if (traceBound[f->var] == 0) out.trace.insert(f->var);
      return;
    case HKind::PropAtom:
      if (propBound[f->name] == 0) out.prop.insert(f->name);
      return;
    case HKind::TreePropAtom:
      if (propBound[f->name] == 0) out.prop.insert(f->name);
      if (traceBound[f->var] == 0) out.trace.insert(f->var);
      return;
    case HKind::ExistsTrace:
    case HKind::ForallTrace:
      ++traceBound[f->var];
      collect_free(f->kids[0], traceBound, propBound, out);
      --traceBound[f->var];
      return;
    case HKind::ExistsProp:
    case HKind::ForallProp:
      ++propBound[f->name];
      collect_free(f->kids[0], traceBound, propBound, out);
      --propBound[f->name];
      return;
    case HKind::Knowledge:
      if (traceBound[f->var] == 0) out.trace.insert(f->var);
      collect_free(f->kids[0], traceBound, propBound, out);
      return;
    default:
      for (const auto& k : f->kids)
        collect_free(k, traceBound, propBound, out);
      return;
  }
}

void collect_aps(const HFPtr& f, std::map<std::string, int>& propBound,
                 std::set<std::string>& out) {
  switch (f->kind) {
    case HKind::TraceAtom:
      out.insert(f->name);
      break;
    case HKind::PropAtom:
      if (propBound[f->name] == 0) out.insert(f->name);
      break;
    case HKind::TreePropAtom:
      if (propBound[f->name] == 0) out.insert(f->name);
      break;
    case HKind::Knowledge:
      for (const auto& a : f->obs) out.insert(a);
      break;
    default:
      break;
  }
  if (f->kind == HKind::ExistsProp || f->kind == HKind::ForallProp) {
    ++propBound[f->name];
    collect_aps(f->kids[0], propBound, out);
    --propBound[f->name];
    return;
  }
  for (const auto& k : f->kids) collect_aps(k, propBound, out);
}

struct AlphaCtx {
  std::map<std::string, std::vector<std::string>> traceMap, propMap;
  int counter = 0;

  std::string fresh() { return "v" + std::to_string(++counter); }

  std::string trace_of(const std::string& v) const {
    auto it = traceMap.find(v);
    if (it == traceMap.end() || it->second.empty()) return v;
    return it->second.back();
  }
  std::string prop_of(const std::string& q) const {
    auto it = propMap.find(q);
    if (it == propMap.end() || it->second.empty()) return q;
    return it->second.back();
  }
};

HFPtr alpha_walk(const HFPtr& f, AlphaCtx& ctx) {
  switch (f->kind) {
    case HKind::TraceAtom:
      return h_atom(f->name, ctx.trace_of(f->var));
    case HKind::PropAtom:
      return h_prop(ctx.prop_of(f->name));
    case HKind::TreePropAtom:
      return h_tree_prop(ctx.prop_of(f->name), ctx.trace_of(f->var));
    case HKind::ExistsTrace:
    case HKind::ForallTrace: {
      std::string nv = ctx.fresh();
      ctx.traceMap[f->var].push_back(nv);
      auto body = alpha_walk(f->kids[0], ctx);
      ctx.traceMap[f->var].pop_back();
      return f->kind == HKind::ExistsTrace ? h_exists_trace(nv, body)
                                           : h_forall_trace(nv, body);
    }
    case HKind::ExistsProp:
    case HKind::ForallProp: {
      std::string nv = ctx.fresh();
      ctx.propMap[f->name].push_back(nv);
      auto body = alpha_walk(f->kids[0], ctx);
      ctx.propMap[f->name].pop_back();
      return f->kind == HKind::ExistsProp ? h_exists_prop(nv, body)
                                          : h_forall_prop(nv, body);
    }
    case HKind::Knowledge: {
      auto body = alpha_walk(f->kids[0], ctx);
      return h_knowledge(f->obs, ctx.trace_of(f->var), body);
    }
    default: {
      std::vector<HFPtr> kids;
      kids.reserve(f->kids.size());
      for (const auto& k : f->kids) kids.push_back(alpha_walk(k, ctx));
      return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                                  std::move(kids));
    }
  }
}

}  // namespace

FreeVars free_variables(const HFPtr& f) {
  FreeVars out;
  std::map<std::string, int> tb, pb;
  collect_free(f, tb, pb, out);
  return out;
}

std::set<std::string> atomic_propositions(const HFPtr& f) {
  std::set<std::string> out;
  std::map<std::string, int> pb;
  collect_aps(f, pb, out);
  return out;
}

HFPtr alpha_normalize(const HFPtr& f) {
  AlphaCtx ctx;
  return alpha_walk(f, ctx);
}

bool alpha_equal(const HFPtr& a, const HFPtr& b) {
  return h_equal(alpha_normalize(a), alpha_normalize(b));
}

namespace {

// Prenex check: the prefix of quantifiers, then a quantifier-free body.
bool quantifier_free(const HFPtr& f) {
  if (h_is_quantifier(f->kind)) return false;
  for (const auto& k : f->kids)
    if (!quantifier_free(k)) return false;
  return true;
}

bool prenex(const HFPtr& f) {
  const HF* cur = f.get();
  while (h_is_quantifier(cur->kind)) cur = cur->kids[0].get();
  for (const auto& k : cur->kids)
    if (!quantifier_free(k)) return false;
  return true;
}

std::optional<std::string> wf_walk(LogicId logic, const HFPtr& f,
                                   std::set<std::string>& boundTrace,
                                   std::set<std::string>& boundProp) {
  switch (f->kind) {
    case HKind::TraceAtom:
      if (!allows_trace_vars(logic))
        return "trace-indexed atom not allowed in " +
               std::string(logic_name(logic));
      if (!boundTrace.count(f->var))
        return "unbound trace variable " + f->var;
      return std::nullopt;
    case HKind::PropAtom:
      if (logic != LogicId::LTL && logic != LogicId::QPTL &&
          !boundProp.count(f->name))
        return "unbound propositional atom " + f->name;
      return std::nullopt;
    case HKind::TreePropAtom:
      if (logic != LogicId::HyperQCTLStar)
        return "path-indexed propositional atom only allowed in hyperqctlstar";
      if (!boundProp.count(f->name))
        return "unbound quantified proposition " + f->name;
      if (!boundTrace.count(f->var)) return "unbound path variable " + f->var;
      return std::nullopt;
    case HKind::ExistsTrace:
    case HKind::ForallTrace: {
      if (!allows_trace_vars(logic))
        return "trace quantifier not allowed in " +
               std::string(logic_name(logic));
      if (boundTrace.count(f->var))
        return "rebinding of trace variable " + f->var;
      boundTrace.insert(f->var);
      auto r = wf_walk(logic, f->kids[0], boundTrace, boundProp);
      boundTrace.erase(f->var);
      return r;
    }
    case HKind::ExistsProp:
    case HKind::ForallProp: {
      if (!allows_prop_quantifiers(logic))
        return "propositional quantifier not allowed in " +
               std::string(logic_name(logic));
      if (boundProp.count(f->name))
        return "rebinding of proposition " + f->name;
      boundProp.insert(f->name);
      auto r = wf_walk(logic, f->kids[0], boundTrace, boundProp);
      boundProp.erase(f->name);
      return r;
    }
    case HKind::Knowledge: {
      if (!allows_knowledge(logic))
        return "knowledge modality only allowed in hyperkctlstar";
      if (!boundTrace.count(f->var)) return "unbound path variable " + f->var;
      return wf_walk(logic, f->kids[0], boundTrace, boundProp);
    }
    default:
      for (const auto& k : f->kids) {
        auto r = wf_walk(logic, k, boundTrace, boundProp);
        if (r) return r;
      }
      return std::nullopt;
  }
}

}  // namespace

std::optional<std::string> check_well_formed(LogicId logic, const HFPtr& f) {
  if (!is_temporal(logic)) return "not a temporal logic";
  std::set<std::string> bt, bp;
  if (auto r = wf_walk(logic, f, bt, bp)) return r;
  if (requires_prenex(logic) && !prenex(f))
    return "quantifiers must form a prenex prefix in " +
           std::string(logic_name(logic));
  return std::nullopt;
}

}  // namespace hlk
