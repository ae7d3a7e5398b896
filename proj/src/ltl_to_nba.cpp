#include "hlk/ltl_to_nba.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "hlk/normal_form.hpp"
#include "hlk/printer.hpp"

namespace hlk {

std::string atom_prop_name(const std::string& ap, const std::string& var) {
  return ap + "@" + var;
}

namespace {

// Rewrites trace atoms to propositions, F/G to U/R, and validates
// quantifier-freeness; input is then NNF'd.
HFPtr pre_rewrite(const HFPtr& f) {
  switch (f->kind) {
    case HKind::TraceAtom:
      return h_prop(atom_prop_name(f->name, f->var));
    case HKind::TreePropAtom:
      return h_prop(atom_prop_name(f->name, f->var));
    case HKind::Eventually:
      return h_until(h_true(), pre_rewrite(f->kids[0]));
    case HKind::Globally:
      return h_release(h_false(), pre_rewrite(f->kids[0]));
    case HKind::ExistsTrace:
    case HKind::ForallTrace:
    case HKind::ExistsProp:
    case HKind::ForallProp:
    case HKind::Knowledge:
      throw std::invalid_argument(
          "ltl_to_nba: quantifier or knowledge operator in matrix");
    default: {
      std::vector<HFPtr> kids;
      for (const auto& k : f->kids) kids.push_back(pre_rewrite(k));
      return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                                  std::move(kids));
    }
  }
}

// Formula interning so tableau nodes can hold integer sets.
struct Arena {
  std::vector<HFPtr> byId;
  std::map<std::string, int> idByKey;
  int id(const HFPtr& f) {
    std::string key = render(f);
    auto it = idByKey.find(key);
    if (it != idByKey.end()) return it->second;
    int i = static_cast<int>(byId.size());
    byId.push_back(f);
    idByKey[key] = i;
    return i;
  }
};

struct TableauNode {
  std::set<int> incoming;  // node ids; -1 = initial
  std::set<int> news, old, next;
};

}  // namespace

Buchi ltl_to_nba(const HFPtr& f, const std::vector<std::string>& vocabulary) {
  HFPtr g = to_nnf(pre_rewrite(f));
  Arena arena;

  std::vector<TableauNode> done;
  int nodeCounter = 0;

  // classic expand; nodes are processed recursively.
  std::function<void(TableauNode, int)> expand = [&](TableauNode q, int id) {
    if (q.news.empty()) {
      for (std::size_t i = 0; i < done.size(); ++i) {
        if (done[i].old == q.old && done[i].next == q.next) {
          done[i].incoming.insert(q.incoming.begin(), q.incoming.end());
          return;
        }
      }
      done.push_back(q);
      int storedIdx = static_cast<int>(done.size()) - 1;
      TableauNode succ;
      succ.incoming = {storedIdx};
      succ.news = done[storedIdx].next;
      expand(succ, ++nodeCounter);
      return;
    }
    int fid = *q.news.begin();
    q.news.erase(q.news.begin());
    HFPtr h = arena.byId[fid];
    switch (h->kind) {
      case HKind::False:
        return;  // inconsistent node dies
      case HKind::True:
        q.old.insert(fid);
        expand(std::move(q), id);
        return;
      case HKind::PropAtom:
      case HKind::Neg: {
        // literal; drop on contradiction
        HFPtr contra = h->kind == HKind::Neg ? h->kids[0] : h_neg(h);
        int cid = arena.id(contra);
        if (q.old.count(cid)) return;
        q.old.insert(fid);
        expand(std::move(q), id);
        return;
      }
      case HKind::And: {
        q.old.insert(fid);
        q.news.insert(arena.id(h->kids[0]));
        q.news.insert(arena.id(h->kids[1]));
        expand(std::move(q), id);
        return;
      }
      case HKind::Or: {
        q.old.insert(fid);
        TableauNode q2 = q;
        q.news.insert(arena.id(h->kids[0]));
        q2.news.insert(arena.id(h->kids[1]));
        expand(std::move(q), id);
        expand(std::move(q2), ++nodeCounter);
        return;
      }
      case HKind::Next: {
        q.old.insert(fid);
        q.next.insert(arena.id(h->kids[0]));
        expand(std::move(q), id);
        return;
      }
      case HKind::Until: {
        q.old.insert(fid);
        TableauNode q2 = q;
        q.news.insert(arena.id(h->kids[0]));
        q.next.insert(fid);
        q2.news.insert(arena.id(h->kids[1]));
        expand(std::move(q), id);
        expand(std::move(q2), ++nodeCounter);
        return;
      }
      case HKind::Release: {
        q.old.insert(fid);
        TableauNode q2 = q;
        q.news.insert(arena.id(h->kids[1]));
        q.next.insert(fid);
        q2.news.insert(arena.id(h->kids[0]));
        q2.news.insert(arena.id(h->kids[1]));
        expand(std::move(q), id);
        expand(std::move(q2), ++nodeCounter);
        return;
      }
      default:
        throw std::logic_error("unexpected node kind in tableau");
    }
  };

  TableauNode start;
  start.incoming = {-1};
  start.news = {arena.id(g)};
  expand(std::move(start), 0);

  // Collect until subformulas for the generalized acceptance condition.
  std::vector<int> untils;
  for (std::size_t i = 0; i < arena.byId.size(); ++i)
    if (arena.byId[i]->kind == HKind::Until) untils.push_back(static_cast<int>(i));

  // Vocabulary
  std::vector<std::string> vocab = vocabulary;
  if (vocab.size() > 16)
    throw std::invalid_argument("vocabulary too large for symbolic letters");
  auto propIdx = [&](const std::string& p) {
    auto it = std::find(vocab.begin(), vocab.end(), p);
    if (it == vocab.end())
      throw std::invalid_argument("proposition " + p + " not in vocabulary");
    return static_cast<int>(it - vocab.begin());
  };

  GenBuchi gen;
  gen.vocab = vocab;
  int n = static_cast<int>(done.size());
  // state 0 = fresh initial; tableau node i -> state i+1
  gen.edges.resize(n + 1);
  gen.init = 0;

  auto node_label = [&](const TableauNode& nd) {
    std::vector<int> pos, neg;
    for (int fid : nd.old) {
      const HFPtr& h = arena.byId[fid];
      if (h->kind == HKind::PropAtom) pos.push_back(propIdx(h->name));
      if (h->kind == HKind::Neg) neg.push_back(propIdx(h->kids[0]->name));
    }
    return Constraint::cube(static_cast<int>(vocab.size()), pos, neg);
  };

  for (int i = 0; i < n; ++i) {
    Constraint label = node_label(done[i]);
    for (int in : done[i].incoming) {
      int src = in == -1 ? 0 : in + 1;
      gen.edges[src].push_back(Buchi::Edge{label, i + 1});
    }
  }

  for (int u : untils) {
    std::vector<bool> acc(n + 1, false);
    acc[0] = true;  // initial state is not on any cycle
    int rhs = arena.id(arena.byId[u]->kids[1]);
    for (int i = 0; i < n; ++i)
      acc[i + 1] = !done[i].old.count(u) || done[i].old.count(rhs);
    gen.acceptSets.push_back(std::move(acc));
  }

  return trim(degeneralize(gen));
}

Buchi ltl_to_nba(const HFPtr& f) {
  HFPtr g = pre_rewrite(f);
  auto aps = atomic_propositions(g);
  auto fv = free_variables(g);
  std::set<std::string> all;
  all.insert(aps.begin(), aps.end());
  all.insert(fv.prop.begin(), fv.prop.end());
  std::vector<std::string> vocab(all.begin(), all.end());
  return ltl_to_nba(f, vocab);
}

Buchi tuple_automaton(
    const HFPtr& quantifierFree,
    const std::vector<std::pair<std::string, std::string>>& slots,
    const std::vector<std::string>& aps) {
  // rename path variables to slot tags, then translate
  std::function<HFPtr(const HFPtr&)> ren = [&](const HFPtr& f) -> HFPtr {
    if (f->kind == HKind::TraceAtom || f->kind == HKind::TreePropAtom) {
      for (const auto& [var, tag] : slots)
        if (f->var == var) return h_atom(f->name, tag);
      throw std::invalid_argument("tuple_automaton: unknown path variable " +
                                  f->var);
    }
    std::vector<HFPtr> kids;
    for (const auto& k : f->kids) kids.push_back(ren(k));
    return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                                std::move(kids));
  };
  HFPtr g = ren(quantifierFree);
  std::vector<std::string> vocab;
  for (const auto& [var, tag] : slots)
    for (const auto& a : aps) vocab.push_back(atom_prop_name(a, tag));
  return ltl_to_nba(g, vocab);
}

Buchi top_automaton(const std::vector<std::string>& vocab) {
  return universal_automaton(vocab);
}

}  // namespace hlk
