#include "hlk/eval_linear.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "hlk/ltl_to_nba.hpp"
#include "hlk/normal_form.hpp"

namespace hlk {

namespace {

struct LassoEval {
  const LassoTrace& w;
  std::size_t R, P;

  explicit LassoEval(const LassoTrace& t)
      : w(t), R(t.prefix.size()), P(t.loop.size()) {}

  std::size_t norm(std::size_t i) const {
    return i < R ? i : R + (i - R) % P;
  }

  bool atom(const std::string& prop, std::size_t i) const {
    return w.at(norm(i)).count(prop) != 0;
  }

  bool eval(const HFPtr& f, std::size_t i) const {
    switch (f->kind) {
      case HKind::True: return true;
      case HKind::False: return false;
      case HKind::PropAtom: return atom(f->name, i);
      case HKind::TraceAtom:
      case HKind::TreePropAtom:
        return atom(atom_prop_name(f->name, f->var), i);
      case HKind::Neg: return !eval(f->kids[0], i);
      case HKind::And: return eval(f->kids[0], i) && eval(f->kids[1], i);
      case HKind::Or: return eval(f->kids[0], i) || eval(f->kids[1], i);
      case HKind::Implies:
        return !eval(f->kids[0], i) || eval(f->kids[1], i);
      case HKind::Iff: return eval(f->kids[0], i) == eval(f->kids[1], i);
      case HKind::Next: return eval(f->kids[0], norm(i + 1));
      case HKind::Until: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (eval(f->kids[1], pos)) return true;
          if (!eval(f->kids[0], pos)) return false;
          pos = norm(pos + 1);
        }
        return false;
      }
      case HKind::Release: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (!eval(f->kids[1], pos)) return false;
          if (eval(f->kids[0], pos)) return true;
          pos = norm(pos + 1);
        }
        return true;
      }
      case HKind::Eventually: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (eval(f->kids[0], pos)) return true;
          pos = norm(pos + 1);
        }
        return false;
      }
      case HKind::Globally: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (!eval(f->kids[0], pos)) return false;
          pos = norm(pos + 1);
        }
        return true;
      }
      default:
        throw std::invalid_argument("eval_ltl_lasso: quantifier in matrix");
    }
  }
};

}  // namespace

bool eval_ltl_lasso(const HFPtr& f, const LassoTrace& w, std::size_t pos) {
  return LassoEval(w).eval(f, pos);
}

// ---------------------------------------------------------------------
// Automata route.

namespace {

HFPtr substitute_traces(const HFPtr& f,
                        const std::map<std::string, std::size_t>& env) {
  if (f->kind == HKind::TraceAtom) {
    auto it = env.find(f->var);
    if (it == env.end())
      throw std::invalid_argument("unbound trace variable " + f->var);
    return h_prop(atom_prop_name(f->name, std::to_string(it->second)));
  }
  std::vector<HFPtr> kids;
  for (const auto& k : f->kids) kids.push_back(substitute_traces(k, env));
  return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                              std::move(kids));
}

struct LinearCtx {
  const TraceSet& T;
  std::vector<std::string> baseVocab;  // a@j entries
};

Buchi compile_linear(const LinearCtx& ctx, const HFPtr& f,
                     std::map<std::string, std::size_t>& env,
                     std::vector<std::string> vocab) {
  switch (f->kind) {
    case HKind::ExistsTrace: {
      Buchi acc = empty_automaton(vocab);
      for (std::size_t j = 0; j < ctx.T.traces.size(); ++j) {
        env[f->var] = j;
        acc = union_(acc, compile_linear(ctx, f->kids[0], env, vocab));
        env.erase(f->var);
      }
      return acc;
    }
    case HKind::ForallTrace: {
      Buchi acc = universal_automaton(vocab);
      for (std::size_t j = 0; j < ctx.T.traces.size(); ++j) {
        env[f->var] = j;
        acc = intersect(acc, compile_linear(ctx, f->kids[0], env, vocab));
        env.erase(f->var);
      }
      return acc;
    }
    case HKind::ExistsProp: {
      auto inner = compile_linear(ctx, f->kids[0], env, vocab);
      return trim(project(inner, f->name));
    }
    case HKind::ForallProp: {
      auto inner = compile_linear(ctx, f->kids[0], env, vocab);
      auto c1 = complement(inner);
      auto p = project(c1, f->name);
      return complement(p);
    }
    default: {
      // quantifier-free matrix
      HFPtr matrix = substitute_traces(f, env);
      return ltl_to_nba(matrix, vocab);
    }
  }
}

std::vector<std::string> collect_prop_prefix(const HFPtr& f) {
  std::vector<std::string> out;
  const HF* cur = f.get();
  while (h_is_quantifier(cur->kind)) {
    if (cur->kind == HKind::ExistsProp || cur->kind == HKind::ForallProp)
      out.push_back(cur->name);
    cur = cur->kids[0].get();
  }
  return out;
}

}  // namespace

bool eval_linear(const Formula& f, const TraceSet& T) {
  if (!is_linear(f.logic) || !is_temporal(f.logic))
    throw std::invalid_argument("eval_linear: not a linear temporal logic");
  if (!h_is_prenex(f.root))
    throw std::invalid_argument("eval_linear: formula must be prenex");

  if (f.logic == LogicId::LTL || f.logic == LogicId::QPTL) {
    // per-trace satisfaction
    for (const auto& t : T.traces) {
      std::vector<std::string> vocab = T.aps;
      for (const auto& q : collect_prop_prefix(f.root)) vocab.push_back(q);
      std::map<std::string, std::size_t> env;
      LinearCtx ctx{T, {}};
      Buchi a = compile_linear(ctx, f.root, env, vocab);
      if (!membership(t, a)) return false;
    }
    return true;
  }

  if (T.traces.empty())
    throw std::invalid_argument("eval_linear: empty trace set");

  std::vector<std::string> vocab;
  for (std::size_t j = 0; j < T.traces.size(); ++j)
    for (const auto& a : T.aps)
      vocab.push_back(atom_prop_name(a, std::to_string(j)));
  for (const auto& q : collect_prop_prefix(f.root)) vocab.push_back(q);

  LinearCtx ctx{T, vocab};
  std::map<std::string, std::size_t> env;
  Buchi a = compile_linear(ctx, f.root, env, vocab);

  std::vector<std::size_t> order(T.traces.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  LassoTrace w = zip_set(T, order);
  return membership(w, a);
}

// ---------------------------------------------------------------------
// Naive route: direct satisfaction relation on unrollings.

namespace {

struct NaiveCtx {
  const TraceSet& T;
  NaiveBounds bounds;
  std::map<std::string, const LassoTrace*> traceEnv;
  std::map<std::string, LassoTrace> propEnv;  // q-lassos over {q}
  std::size_t R = 0, P = 1;

  void recompute_period() {
    R = 0;
    P = 1;
    for (const auto& t : T.traces) {
      R = std::max(R, t.prefix.size());
      P = static_cast<std::size_t>(lcm_u64(P, t.loop.size()));
    }
    for (const auto& [q, t] : propEnv) {
      R = std::max(R, t.prefix.size());
      P = static_cast<std::size_t>(lcm_u64(P, t.loop.size()));
    }
  }

  std::size_t norm(std::size_t i) const {
    return i < R ? i : R + (i - R) % P;
  }

  bool eval(const HFPtr& f, std::size_t i) {
    switch (f->kind) {
      case HKind::True: return true;
      case HKind::False: return false;
      case HKind::TraceAtom: {
        auto it = traceEnv.find(f->var);
        if (it == traceEnv.end())
          throw std::invalid_argument("unbound trace variable " + f->var);
        return it->second->at(i).count(f->name) != 0;
      }
      case HKind::PropAtom: {
        auto it = propEnv.find(f->name);
        if (it == propEnv.end())
          throw std::invalid_argument("unbound proposition " + f->name);
        return it->second.at(i).count(f->name) != 0;
      }
      case HKind::Neg: return !eval(f->kids[0], i);
      case HKind::And: return eval(f->kids[0], i) && eval(f->kids[1], i);
      case HKind::Or: return eval(f->kids[0], i) || eval(f->kids[1], i);
      case HKind::Implies:
        return !eval(f->kids[0], i) || eval(f->kids[1], i);
      case HKind::Iff: return eval(f->kids[0], i) == eval(f->kids[1], i);
      case HKind::Next: return eval(f->kids[0], norm(i + 1));
      case HKind::Until: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (eval(f->kids[1], pos)) return true;
          if (!eval(f->kids[0], pos)) return false;
          pos = norm(pos + 1);
        }
        return false;
      }
      case HKind::Release: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (!eval(f->kids[1], pos)) return false;
          if (eval(f->kids[0], pos)) return true;
          pos = norm(pos + 1);
        }
        return true;
      }
      case HKind::Eventually: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (eval(f->kids[0], pos)) return true;
          pos = norm(pos + 1);
        }
        return false;
      }
      case HKind::Globally: {
        std::size_t pos = norm(i);
        for (std::size_t step = 0; step <= R + P; ++step) {
          if (!eval(f->kids[0], pos)) return false;
          pos = norm(pos + 1);
        }
        return true;
      }
      case HKind::ExistsTrace: {
        for (const auto& t : T.traces) {
          traceEnv[f->var] = &t;
          bool r = eval(f->kids[0], i);
          traceEnv.erase(f->var);
          if (r) return true;
        }
        return false;
      }
      case HKind::ForallTrace: {
        for (const auto& t : T.traces) {
          traceEnv[f->var] = &t;
          bool r = eval(f->kids[0], i);
          traceEnv.erase(f->var);
          if (!r) return false;
        }
        return true;
      }
      case HKind::ExistsProp:
      case HKind::ForallProp: {
        bool isExists = f->kind == HKind::ExistsProp;
        std::size_t savedR = R, savedP = P;
        for (std::size_t pre = 0; pre <= bounds.qPrefixMax; ++pre) {
          for (std::size_t loop = 1; loop <= bounds.qLoopMax; ++loop) {
            std::uint64_t combos = std::uint64_t{1} << (pre + loop);
            for (std::uint64_t bitsv = 0; bitsv < combos; ++bitsv) {
              LassoTrace q;
              for (std::size_t k = 0; k < pre; ++k)
                q.prefix.push_back(bitsv >> k & 1 ? Letter{f->name}
                                                  : Letter{});
              for (std::size_t k = 0; k < loop; ++k)
                q.loop.push_back(bitsv >> (pre + k) & 1 ? Letter{f->name}
                                                        : Letter{});
              propEnv[f->name] = std::move(q);
              recompute_period();
              bool r = eval(f->kids[0], i);
              propEnv.erase(f->name);
              R = savedR;
              P = savedP;
              if (isExists && r) return true;
              if (!isExists && !r) return false;
            }
          }
        }
        return !isExists;
      }
      default:
        throw std::invalid_argument("eval_linear_naive: unsupported node");
    }
  }
};

}  // namespace

bool eval_linear_naive(const Formula& f, const TraceSet& T,
                       const NaiveBounds& bounds) {
  if (f.logic == LogicId::LTL || f.logic == LogicId::QPTL) {
    for (const auto& t : T.traces) {
      TraceSet single;
      single.aps = T.aps;
      single.traces = {t};
      // Free (unquantified) props must be read from the trace; rewrite
      // them into trace atoms over a synthetic variable.
      auto fv = free_variables(f.root);
      HFPtr root = f.root;
      if (!fv.prop.empty()) {
        std::function<HFPtr(const HFPtr&, const std::set<std::string>&)> rw =
            [&](const HFPtr& g, const std::set<std::string>& freeProps)
            -> HFPtr {
          if (g->kind == HKind::PropAtom && freeProps.count(g->name))
            return h_atom(g->name, "@self");
          if (g->kind == HKind::ExistsProp || g->kind == HKind::ForallProp) {
            auto inner = freeProps;
            inner.erase(g->name);
            std::vector<HFPtr> kids{rw(g->kids[0], inner)};
            return std::make_shared<HF>(g->kind, g->name, g->var, g->obs,
                                        std::move(kids));
          }
          std::vector<HFPtr> kids;
          for (const auto& k : g->kids) kids.push_back(rw(k, freeProps));
          return std::make_shared<HF>(g->kind, g->name, g->var, g->obs,
                                      std::move(kids));
        };
        root = rw(f.root, fv.prop);
      }
      NaiveCtx c2{single, bounds, {}, {}, 0, 1};
      c2.recompute_period();
      c2.traceEnv["@self"] = &single.traces[0];
      if (!c2.eval(root, 0)) return false;
    }
    return true;
  }
  NaiveCtx ctx{T, bounds, {}, {}, 0, 1};
  ctx.recompute_period();
  return ctx.eval(f.root, 0);
}

}  // namespace hlk
