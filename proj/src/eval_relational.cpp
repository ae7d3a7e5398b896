#include "hlk/eval_relational.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hlk/buchi.hpp"
#include "hlk/eval_linear.hpp"
#include "hlk/ltl_to_nba.hpp"
#include "hlk/normal_form.hpp"

namespace hlk {

bool SOValuation::contains(const TraceSet& T, std::size_t traceIdx,
                           std::size_t pos) const {
  if (traceIdx >= per.size()) return false;
  const auto& pt = per[traceIdx];
  const auto& tr = T.traces[traceIdx];
  if (pos < tr.prefix.size())
    return pos < pt.prefix.size() && pt.prefix[pos];
  if (pt.loop.empty()) return false;
  std::size_t k = (pos - tr.prefix.size()) % tr.loop.size();
  return k < pt.loop.size() && pt.loop[k];
}

namespace {

std::string marker_name(const std::string& x) { return "#" + x; }
std::string track_name(const std::string& X, std::size_t j) {
  return "#" + X + "@" + std::to_string(j);
}

HFPtr next_n(std::size_t k, HFPtr f) {
  for (std::size_t i = 0; i < k; ++i) f = h_next(std::move(f));
  return f;
}

// (!m) U (m & X G !m): m holds exactly once.
HFPtr exactly_once(const std::string& m) {
  return h_until(h_neg(h_prop(m)),
                 h_and(h_prop(m), h_next(h_globally(h_neg(h_prop(m))))));
}

struct RelCtx {
  const TraceSet& T;
  std::set<std::string> boundSO;  // currently bound second-order variables
  // first-order environment: variable -> (trace index, marker prop)
  std::map<std::string, std::pair<std::size_t, std::string>> env;

  std::size_t trace_of(const TermShape& s) const {
    auto it = env.find(s.base);
    if (it == env.end())
      throw std::invalid_argument("unbound first-order variable " + s.base);
    return it->second.first;
  }
  const std::string& marker_of(const TermShape& s) const {
    return env.at(s.base).second;
  }
};

// Position of a term: either marker + offset, or constant (min-based).
struct Pos {
  bool constant;
  std::string marker;  // when !constant
  long offset;         // k for S^k, or the constant value
};

Pos term_pos(const RelCtx& ctx, const RTermPtr& t) {
  TermShape s = term_shape(t);
  if (s.from_min) return Pos{true, "", s.offset};
  return Pos{false, ctx.marker_of(s), s.offset};
}

// "position(p1) == position(p2)" as an LTL formula over marker props.
HFPtr pos_eq(const Pos& a, const Pos& b) {
  if (a.constant && b.constant)
    return a.offset == b.offset ? h_true() : h_false();
  if (a.constant) return pos_eq(b, a);
  if (b.constant) {
    long e = b.offset - a.offset;  // pos(a) must equal e
    if (e < 0) return h_false();
    return next_n(static_cast<std::size_t>(e), h_prop(a.marker));
  }
  long d = a.offset - b.offset;  // pos(b) = pos(a) + d
  if (d >= 0)
    return h_eventually(h_and(h_prop(a.marker),
                              next_n(static_cast<std::size_t>(d),
                                     h_prop(b.marker))));
  return h_eventually(h_and(h_prop(b.marker),
                            next_n(static_cast<std::size_t>(-d),
                                   h_prop(a.marker))));
}

// "position(p1) < position(p2)".
HFPtr pos_less(const Pos& a, const Pos& b) {
  if (a.constant && b.constant)
    return a.offset < b.offset ? h_true() : h_false();
  if (a.constant) {
    long e = a.offset - b.offset;  // pos(b) > e
    if (e < 0) return h_true();
    return next_n(static_cast<std::size_t>(e + 1),
                  h_eventually(h_prop(b.marker)));
  }
  if (b.constant) {
    long e = b.offset - a.offset;  // pos(a) < e
    if (e <= 0) return h_false();
    return h_neg(next_n(static_cast<std::size_t>(e),
                        h_eventually(h_prop(a.marker))));
  }
  long d = a.offset - b.offset;  // pos(b) > pos(a) + d
  if (d >= 0)
    return h_eventually(
        h_and(h_prop(a.marker),
              next_n(static_cast<std::size_t>(d + 1),
                     h_eventually(h_prop(b.marker)))));
  long c = -d - 1;  // !(pos(a) > pos(b) + c)
  return h_neg(h_eventually(
      h_and(h_prop(b.marker),
            next_n(static_cast<std::size_t>(c + 1),
                   h_eventually(h_prop(a.marker))))));
}

// "proposition p holds at position(term)".
HFPtr at_pos(const Pos& a, HFPtr point) {
  if (a.constant) return next_n(static_cast<std::size_t>(a.offset), point);
  return h_eventually(h_and(h_prop(a.marker),
                            next_n(static_cast<std::size_t>(a.offset),
                                   std::move(point))));
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

HFPtr atom_to_ltl(const RelCtx& ctx, const RFPtr& f) {
  switch (f->kind) {
    case RKind::True: return h_true();
    case RKind::False: return h_false();
    case RKind::Pred: {
      TermShape s = term_shape(f->t1);
      std::size_t j = ctx.trace_of(s);
      return at_pos(term_pos(ctx, f->t1),
                    h_prop(atom_prop_name(f->name, std::to_string(j))));
    }
    case RKind::InSet: {
      TermShape s = term_shape(f->t1);
      std::size_t j = ctx.trace_of(s);
      std::string point;
      if (ctx.boundSO.count(f->name)) {
        point = track_name(f->name, j);
      } else if (starts_with(f->name, "X_")) {
        point = atom_prop_name(f->name.substr(2), std::to_string(j));
      } else {
        throw std::invalid_argument("unbound second-order variable " +
                                    f->name);
      }
      return at_pos(term_pos(ctx, f->t1), h_prop(point));
    }
    case RKind::Eq: {
      TermShape s1 = term_shape(f->t1), s2 = term_shape(f->t2);
      if (ctx.trace_of(s1) != ctx.trace_of(s2)) return h_false();
      return pos_eq(term_pos(ctx, f->t1), term_pos(ctx, f->t2));
    }
    case RKind::Less: {
      TermShape s1 = term_shape(f->t1), s2 = term_shape(f->t2);
      if (ctx.trace_of(s1) != ctx.trace_of(s2)) return h_false();
      return pos_less(term_pos(ctx, f->t1), term_pos(ctx, f->t2));
    }
    case RKind::EqualLevel:
      return pos_eq(term_pos(ctx, f->t1), term_pos(ctx, f->t2));
    default:
      throw std::logic_error("atom_to_ltl: not an atom");
  }
}

bool r_quantifier_free(const RFPtr& f) {
  if (r_is_quantifier(f->kind)) return false;
  for (const auto& k : f->kids)
    if (!r_quantifier_free(k)) return false;
  return true;
}

HFPtr matrix_to_ltl(const RelCtx& ctx, const RFPtr& f) {
  switch (f->kind) {
    case RKind::Neg: return h_neg(matrix_to_ltl(ctx, f->kids[0]));
    case RKind::And:
      return h_and(matrix_to_ltl(ctx, f->kids[0]),
                   matrix_to_ltl(ctx, f->kids[1]));
    case RKind::Or:
      return h_or(matrix_to_ltl(ctx, f->kids[0]),
                  matrix_to_ltl(ctx, f->kids[1]));
    case RKind::Implies:
      return h_implies(matrix_to_ltl(ctx, f->kids[0]),
                       matrix_to_ltl(ctx, f->kids[1]));
    case RKind::Iff:
      return h_iff(matrix_to_ltl(ctx, f->kids[0]),
                   matrix_to_ltl(ctx, f->kids[1]));
    default:
      return atom_to_ltl(ctx, f);
  }
}

Buchi compile_rel(RelCtx& ctx, const RFPtr& f,
                  std::vector<std::string> vocab) {
  if (r_quantifier_free(f))
    return ltl_to_nba(matrix_to_ltl(ctx, f), vocab);
  switch (f->kind) {
    case RKind::And:
      return intersect(compile_rel(ctx, f->kids[0], vocab),
                       compile_rel(ctx, f->kids[1], vocab));
    case RKind::Or:
      return union_(compile_rel(ctx, f->kids[0], vocab),
                    compile_rel(ctx, f->kids[1], vocab));
    case RKind::Neg:
      return complement(compile_rel(ctx, f->kids[0], vocab));
    case RKind::Implies:
      return union_(complement(compile_rel(ctx, f->kids[0], vocab)),
                    compile_rel(ctx, f->kids[1], vocab));
    case RKind::Iff: {
      auto a = compile_rel(ctx, f->kids[0], vocab);
      auto b = compile_rel(ctx, f->kids[1], vocab);
      return union_(intersect(a, b), intersect(complement(a), complement(b)));
    }
    case RKind::ExistsFO:
    case RKind::ForallFO: {
      bool isExists = f->kind == RKind::ExistsFO;
      std::string m = marker_name(f->name);
      auto vocab2 = vocab;
      vocab2.push_back(m);
      Buchi once = ltl_to_nba(exactly_once(m), vocab2);
      Buchi acc = empty_automaton(vocab);
      for (std::size_t j = 0; j < ctx.T.traces.size(); ++j) {
        ctx.env[f->name] = {j, m};
        Buchi body = compile_rel(ctx, f->kids[0], vocab2);
        ctx.env.erase(f->name);
        if (!isExists) body = complement(body);
        Buchi branch = trim(project(intersect(body, once), m));
        acc = union_(acc, branch);
      }
      return isExists ? acc : complement(acc);
    }
    case RKind::ExistsSO:
    case RKind::ForallSO: {
      bool isExists = f->kind == RKind::ExistsSO;
      auto vocab2 = vocab;
      std::vector<std::string> tracks;
      for (std::size_t j = 0; j < ctx.T.traces.size(); ++j) {
        tracks.push_back(track_name(f->name, j));
        vocab2.push_back(tracks.back());
      }
      ctx.boundSO.insert(f->name);
      Buchi body = compile_rel(ctx, f->kids[0], vocab2);
      ctx.boundSO.erase(f->name);
      if (!isExists) body = complement(body);
      for (const auto& t : tracks) body = trim(project(body, t));
      return isExists ? body : complement(body);
    }
    default:
      throw std::logic_error("compile_rel: unexpected node");
  }
}

}  // namespace

bool eval_relational_linear(const RFormula& f, const TraceSet& T,
                            const std::map<std::string, SOValuation>& fixedSO,
                            const std::map<std::string, FOValuation>& fixedFO) {
  if (!is_relational(f.logic) || !is_linear(f.logic))
    throw std::invalid_argument(
        "eval_relational_linear: expects foe or s1se input");
  if (T.traces.empty())
    throw std::invalid_argument("eval_relational_linear: empty trace set");

  RFPtr root = r_to_nnf(f.root);

  std::size_t n = T.traces.size();
  std::vector<std::string> vocab;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& a : T.aps)
      vocab.push_back(atom_prop_name(a, std::to_string(j)));

  RelCtx ctx{T, {}, {}};

  // Fixed free variables extend the zipped word with explicit tracks.
  std::size_t maxFixedPos = 0;
  for (const auto& [x, v] : fixedFO) maxFixedPos = std::max(maxFixedPos, v.pos);
  for (const auto& [X, v] : fixedSO) {
    ctx.boundSO.insert(X);
    for (std::size_t j = 0; j < n; ++j) vocab.push_back(track_name(X, j));
  }
  for (const auto& [x, v] : fixedFO) {
    ctx.env[x] = {v.traceIdx, marker_name(x)};
    vocab.push_back(marker_name(x));
  }

  Buchi a = compile_rel(ctx, root, vocab);

  // Build the zipped word, extended with the fixed tracks.
  std::size_t R = 0;
  std::uint64_t P = 1;
  for (const auto& t : T.traces) {
    R = std::max(R, t.prefix.size());
    P = lcm_u64(P, t.loop.size());
  }
  R = std::max(R, maxFixedPos + 1);
  LassoTrace w;
  auto letter = [&](std::size_t i) {
    Letter l;
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& x : T.traces[j].at(i))
        l.insert(atom_prop_name(x, std::to_string(j)));
    for (const auto& [X, v] : fixedSO)
      for (std::size_t j = 0; j < n; ++j)
        if (v.contains(T, j, i)) l.insert(track_name(X, j));
    for (const auto& [x, v] : fixedFO)
      if (i == v.pos) l.insert(marker_name(x));
    return l;
  };
  for (std::size_t i = 0; i < R; ++i) w.prefix.push_back(letter(i));
  for (std::size_t i = R; i < R + P; ++i) w.loop.push_back(letter(i));

  return membership(w, a);
}

}  // namespace hlk
