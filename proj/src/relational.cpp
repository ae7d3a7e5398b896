#include "hlk/relational.hpp"

#include <map>

namespace hlk {

RTermPtr t_var(std::string x) {
  return std::make_shared<RTerm>(RTerm{TKind::Var, std::move(x), nullptr});
}
RTermPtr t_min(std::string x) {
  return std::make_shared<RTerm>(RTerm{TKind::Min, std::move(x), nullptr});
}
RTermPtr t_succ(RTermPtr t) {
  return std::make_shared<RTerm>(RTerm{TKind::Succ, {}, std::move(t)});
}

TermShape term_shape(const RTermPtr& t) {
  int off = 0;
  const RTerm* cur = t.get();
  while (cur->kind == TKind::Succ) {
    ++off;
    cur = cur->child.get();
  }
  return TermShape{cur->var, cur->kind == TKind::Min, off};
}

bool t_equal(const RTermPtr& a, const RTermPtr& b) {
  auto sa = term_shape(a), sb = term_shape(b);
  return sa.base == sb.base && sa.from_min == sb.from_min &&
         sa.offset == sb.offset;
}

namespace {
RFPtr mk(RKind k, std::string n = {}, RTermPtr a = nullptr,
         RTermPtr b = nullptr, std::vector<RFPtr> c = {}) {
  return std::make_shared<RF>(
      RF{k, std::move(n), std::move(a), std::move(b), std::move(c)});
}
}  // namespace

RFPtr r_true() { return mk(RKind::True); }
RFPtr r_false() { return mk(RKind::False); }
RFPtr r_pred(std::string ap, RTermPtr t) {
  return mk(RKind::Pred, std::move(ap), std::move(t));
}
RFPtr r_in(RTermPtr t, std::string X) {
  return mk(RKind::InSet, std::move(X), std::move(t));
}
RFPtr r_eq(RTermPtr a, RTermPtr b) {
  return mk(RKind::Eq, {}, std::move(a), std::move(b));
}
RFPtr r_less(RTermPtr a, RTermPtr b) {
  return mk(RKind::Less, {}, std::move(a), std::move(b));
}
RFPtr r_eqlevel(RTermPtr a, RTermPtr b) {
  return mk(RKind::EqualLevel, {}, std::move(a), std::move(b));
}
RFPtr r_neg(RFPtr f) { return mk(RKind::Neg, {}, nullptr, nullptr, {std::move(f)}); }
RFPtr r_and(RFPtr a, RFPtr b) {
  return mk(RKind::And, {}, nullptr, nullptr, {std::move(a), std::move(b)});
}
RFPtr r_or(RFPtr a, RFPtr b) {
  return mk(RKind::Or, {}, nullptr, nullptr, {std::move(a), std::move(b)});
}
RFPtr r_implies(RFPtr a, RFPtr b) {
  return mk(RKind::Implies, {}, nullptr, nullptr,
            {std::move(a), std::move(b)});
}
RFPtr r_iff(RFPtr a, RFPtr b) {
  return mk(RKind::Iff, {}, nullptr, nullptr, {std::move(a), std::move(b)});
}
RFPtr r_exists_fo(std::string x, RFPtr f) {
  return mk(RKind::ExistsFO, std::move(x), nullptr, nullptr, {std::move(f)});
}
RFPtr r_forall_fo(std::string x, RFPtr f) {
  return mk(RKind::ForallFO, std::move(x), nullptr, nullptr, {std::move(f)});
}
RFPtr r_exists_so(std::string X, RFPtr f) {
  return mk(RKind::ExistsSO, std::move(X), nullptr, nullptr, {std::move(f)});
}
RFPtr r_forall_so(std::string X, RFPtr f) {
  return mk(RKind::ForallSO, std::move(X), nullptr, nullptr, {std::move(f)});
}

RFPtr r_and_all(const std::vector<RFPtr>& fs) {
  if (fs.empty()) return r_true();
  RFPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = r_and(*it, acc);
  return acc;
}

RFPtr r_or_all(const std::vector<RFPtr>& fs) {
  if (fs.empty()) return r_false();
  RFPtr acc = fs.back();
  for (auto it = fs.rbegin() + 1; it != fs.rend(); ++it) acc = r_or(*it, acc);
  return acc;
}

bool r_equal(const RFPtr& a, const RFPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name ||
      a->kids.size() != b->kids.size())
    return false;
  if ((a->t1 != nullptr) != (b->t1 != nullptr)) return false;
  if (a->t1 && !t_equal(a->t1, b->t1)) return false;
  if ((a->t2 != nullptr) != (b->t2 != nullptr)) return false;
  if (a->t2 && !t_equal(a->t2, b->t2)) return false;
  for (std::size_t i = 0; i < a->kids.size(); ++i)
    if (!r_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

std::size_t r_size(const RFPtr& f) {
  std::size_t n = 1;
  for (const auto& k : f->kids) n += r_size(k);
  return n;
}

namespace {

void term_free(const RTermPtr& t, std::map<std::string, int>& foBound,
               RFreeVars& out) {
  if (!t) return;
  auto s = term_shape(t);
  if (foBound[s.base] == 0) out.fo.insert(s.base);
}

void collect_free(const RFPtr& f, std::map<std::string, int>& foBound,
                  std::map<std::string, int>& soBound, RFreeVars& out) {
  switch (f->kind) {
    case RKind::InSet:
      term_free(f->t1, foBound, out);
      if (soBound[f->name] == 0) out.so.insert(f->name);
      return;
    case RKind::ExistsFO:
    case RKind::ForallFO:
      ++foBound[f->name];
      collect_free(f->kids[0], foBound, soBound, out);
      --foBound[f->name];
      return;
    case RKind::ExistsSO:
    case RKind::ForallSO:
      ++soBound[f->name];
      collect_free(f->kids[0], foBound, soBound, out);
      --soBound[f->name];
      return;
    default:
      term_free(f->t1, foBound, out);
      term_free(f->t2, foBound, out);
      for (const auto& k : f->kids) collect_free(k, foBound, soBound, out);
      return;
  }
}

struct RAlphaCtx {
  std::map<std::string, std::vector<std::string>> foMap, soMap;
  int counter = 0;
  std::string fresh(bool so) {
    return (so ? "V" : "v") + std::to_string(++counter);
  }
  std::string fo_of(const std::string& v) const {
    auto it = foMap.find(v);
    if (it == foMap.end() || it->second.empty()) return v;
    return it->second.back();
  }
  std::string so_of(const std::string& v) const {
    auto it = soMap.find(v);
    if (it == soMap.end() || it->second.empty()) return v;
    return it->second.back();
  }
};

RTermPtr term_rename(const RTermPtr& t, RAlphaCtx& ctx) {
  if (!t) return nullptr;
  switch (t->kind) {
    case TKind::Var:
      return t_var(ctx.fo_of(t->var));
    case TKind::Min:
      return t_min(ctx.fo_of(t->var));
    case TKind::Succ:
      return t_succ(term_rename(t->child, ctx));
  }
  return nullptr;
}

RFPtr r_alpha_walk(const RFPtr& f, RAlphaCtx& ctx) {
  switch (f->kind) {
    case RKind::ExistsFO:
    case RKind::ForallFO: {
      std::string nv = ctx.fresh(false);
      ctx.foMap[f->name].push_back(nv);
      auto body = r_alpha_walk(f->kids[0], ctx);
      ctx.foMap[f->name].pop_back();
      return f->kind == RKind::ExistsFO ? r_exists_fo(nv, body)
                                        : r_forall_fo(nv, body);
    }
    case RKind::ExistsSO:
    case RKind::ForallSO: {
      std::string nv = ctx.fresh(true);
      ctx.soMap[f->name].push_back(nv);
      auto body = r_alpha_walk(f->kids[0], ctx);
      ctx.soMap[f->name].pop_back();
      return f->kind == RKind::ExistsSO ? r_exists_so(nv, body)
                                        : r_forall_so(nv, body);
    }
    case RKind::InSet:
      return r_in(term_rename(f->t1, ctx), ctx.so_of(f->name));
    default: {
      std::vector<RFPtr> kids;
      for (const auto& k : f->kids) kids.push_back(r_alpha_walk(k, ctx));
      return std::make_shared<RF>(RF{f->kind, f->name,
                                     term_rename(f->t1, ctx),
                                     term_rename(f->t2, ctx),
                                     std::move(kids)});
    }
  }
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

}  // namespace

RFreeVars r_free_variables(const RFPtr& f) {
  RFreeVars out;
  std::map<std::string, int> fb, sb;
  collect_free(f, fb, sb, out);
  return out;
}

std::set<std::string> r_atomic_propositions(const RFPtr& f) {
  std::set<std::string> out;
  if (f->kind == RKind::Pred) out.insert(f->name);
  if (f->kind == RKind::InSet && starts_with(f->name, "X_"))
    out.insert(f->name.substr(2));
  for (const auto& k : f->kids) {
    auto s = r_atomic_propositions(k);
    out.insert(s.begin(), s.end());
  }
  return out;
}

bool s1se_closed(const RFPtr& f) {
  auto fv = r_free_variables(f);
  if (!fv.fo.empty()) return false;
  for (const auto& X : fv.so)
    if (!starts_with(X, "X_")) return false;
  return true;
}

RFPtr r_alpha_normalize(const RFPtr& f) {
  RAlphaCtx ctx;
  return r_alpha_walk(f, ctx);
}

bool r_alpha_equal(const RFPtr& a, const RFPtr& b) {
  return r_equal(r_alpha_normalize(a), r_alpha_normalize(b));
}

namespace {

std::optional<std::string> term_wf(LogicId logic, const RTermPtr& t,
                                   std::set<std::string>& foBound) {
  if (!t) return std::nullopt;
  auto s = term_shape(t);
  if (!allows_terms(logic) && (s.from_min || s.offset > 0))
    return "min/S terms only allowed in s1se";
  if (!foBound.count(s.base) && !s.from_min && s.offset == 0) {
    // plain free variable: allowed, reported by free_variables
  }
  return std::nullopt;
}

std::optional<std::string> r_wf_walk(LogicId logic, const RFPtr& f,
                                     std::set<std::string>& foBound,
                                     std::set<std::string>& soBound) {
  switch (f->kind) {
    case RKind::Pred:
      if (logic == LogicId::S1SE)
        return "S1S[E] has no P_a atoms; use membership in X_a";
      return term_wf(logic, f->t1, foBound);
    case RKind::InSet: {
      if (!allows_second_order(logic))
        return "set membership not allowed in " +
               std::string(logic_name(logic));
      return term_wf(logic, f->t1, foBound);
    }
    case RKind::ExistsFO:
    case RKind::ForallFO: {
      if (foBound.count(f->name))
        return "rebinding of first-order variable " + f->name;
      foBound.insert(f->name);
      auto r = r_wf_walk(logic, f->kids[0], foBound, soBound);
      foBound.erase(f->name);
      return r;
    }
    case RKind::ExistsSO:
    case RKind::ForallSO: {
      if (!allows_second_order(logic))
        return "second-order quantification not allowed in " +
               std::string(logic_name(logic));
      if (soBound.count(f->name))
        return "rebinding of second-order variable " + f->name;
      soBound.insert(f->name);
      auto r = r_wf_walk(logic, f->kids[0], foBound, soBound);
      soBound.erase(f->name);
      return r;
    }
    default: {
      if (auto r = term_wf(logic, f->t1, foBound)) return r;
      if (auto r = term_wf(logic, f->t2, foBound)) return r;
      for (const auto& k : f->kids) {
        auto r = r_wf_walk(logic, k, foBound, soBound);
        if (r) return r;
      }
      return std::nullopt;
    }
  }
}

}  // namespace

std::optional<std::string> r_check_well_formed(LogicId logic, const RFPtr& f) {
  if (!is_relational(logic)) return "not a relational logic";
  std::set<std::string> fb, sb;
  return r_wf_walk(logic, f, fb, sb);
}

}  // namespace hlk
