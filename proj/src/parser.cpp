#include "hlk/parser.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <vector>

namespace hlk {

namespace {

enum class Tok {
  Ident, LParen, RParen, LBracket, RBracket, Dot, Comma, Semi,
  And, Or, Not, Implies, Iff, Less, Equals,
  Exists, Forall, True, False,
  OpX, OpF, OpG, OpU, OpR, OpK, OpE, OpA,
  KwIn, KwMin, KwS,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line, col;
};

class Lexer {
 public:
  Lexer(const std::string& src, bool temporal, bool ctlstar)
      : src_(src), temporal_(temporal), ctlstar_(ctlstar) {
    next();
  }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    next();
    return t;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.col, msg);
  }

 private:
  void next() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '\n') { ++line_; col_ = 1; ++pos_; continue; }
      if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++pos_; continue; }
      if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    int l = line_, c0 = col_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, "", l, c0};
      return;
    }
    char c = src_[pos_];
    auto two = [&](char a, char b) {
      return c == a && pos_ + 1 < src_.size() && src_[pos_ + 1] == b;
    };
    if (two('-', '>')) { adv(2); tok_ = {Tok::Implies, "->", l, c0}; return; }
    if (c == '<' && pos_ + 2 < src_.size() && src_[pos_ + 1] == '-' &&
        src_[pos_ + 2] == '>') {
      adv(3); tok_ = {Tok::Iff, "<->", l, c0}; return;
    }
    switch (c) {
      case '(': adv(1); tok_ = {Tok::LParen, "(", l, c0}; return;
      case ')': adv(1); tok_ = {Tok::RParen, ")", l, c0}; return;
      case '[': adv(1); tok_ = {Tok::LBracket, "[", l, c0}; return;
      case ']': adv(1); tok_ = {Tok::RBracket, "]", l, c0}; return;
      case '.': adv(1); tok_ = {Tok::Dot, ".", l, c0}; return;
      case ',': adv(1); tok_ = {Tok::Comma, ",", l, c0}; return;
      case ';': adv(1); tok_ = {Tok::Semi, ";", l, c0}; return;
      case '&': adv(1); tok_ = {Tok::And, "&", l, c0}; return;
      case '|': adv(1); tok_ = {Tok::Or, "|", l, c0}; return;
      case '!': adv(1); tok_ = {Tok::Not, "!", l, c0}; return;
      case '<': adv(1); tok_ = {Tok::Less, "<", l, c0}; return;
      case '=': adv(1); tok_ = {Tok::Equals, "=", l, c0}; return;
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
              src_[pos_] == '_' || src_[pos_] == '\''))
        adv(1);
      std::string word = src_.substr(start, pos_ - start);
      tok_ = {keyword(word), word, l, c0};
      return;
    }
    throw ParseError(l, c0, std::string("unexpected character '") + c + "'");
  }

  Tok keyword(const std::string& w) const {
    if (w == "exists") return Tok::Exists;
    if (w == "forall") return Tok::Forall;
    if (w == "true") return Tok::True;
    if (w == "false") return Tok::False;
    if (temporal_) {
      if (w == "X") return Tok::OpX;
      if (w == "F") return Tok::OpF;
      if (w == "G") return Tok::OpG;
      if (w == "U") return Tok::OpU;
      if (w == "R") return Tok::OpR;
      if (w == "K") return Tok::OpK;
      if (ctlstar_) {
        if (w == "E") return Tok::OpE;
        if (w == "A") return Tok::OpA;
      }
    } else {
      if (w == "E") return Tok::OpE;
      if (w == "in") return Tok::KwIn;
      if (w == "min") return Tok::KwMin;
      if (w == "S") return Tok::KwS;
    }
    return Tok::Ident;
  }

  void adv(int n) { pos_ += n; col_ += n; }

  const std::string& src_;
  bool temporal_, ctlstar_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
  Token tok_{};
};

// ---------------------------------------------------------------------
// Temporal parsing: a raw tree first, then name resolution.

struct Raw;
using RawPtr = std::shared_ptr<Raw>;

struct Raw {
  enum class K {
    True, False, Atom, Neg, And, Or, Implies, Iff,
    Next, Until, Release, Ev, Glob,
    Exists, Forall, Knowledge, PathExists, PathForall,
  } k;
  std::string head;              // atom head / quantified name
  std::string index;             // atom index (empty if bare)
  bool indexed = false;
  std::vector<std::string> obs;  // K observation set
  std::vector<RawPtr> kids;
  int line = 0, col = 0;
};

RawPtr raw(Raw::K k, std::vector<RawPtr> kids = {}) {
  auto r = std::make_shared<Raw>();
  r->k = k;
  r->kids = std::move(kids);
  return r;
}

class TemporalParser {
 public:
  TemporalParser(const std::string& text, LogicId logic)
      : lex_(text, true, logic == LogicId::CTLStar), logic_(logic) {}

  Formula run() {
    RawPtr root = formula();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
    resolve_quantifiers(root);
    HFPtr hf = lower(root);
    if (logic_ == LogicId::CTLStar && has_free_atoms_) {
      std::string v = "p" + std::to_string(++pathCounter_);
      hf = h_exists_trace(v, substitute_marker(hf, v));
    }
    hf = rename_duplicates(hf);
    if (auto err = check_well_formed(logic_, hf))
      throw ParseError(1, 1, *err);
    return Formula{logic_, hf};
  }

 private:
  RawPtr formula() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Exists || t.kind == Tok::Forall) {
      bool ex = t.kind == Tok::Exists;
      lex_.take();
      Token name = expect(Tok::Ident, "quantified variable name");
      expect(Tok::Dot, "'.' after quantified variable");
      auto body = formula();
      auto q = raw(ex ? Raw::K::Exists : Raw::K::Forall, {body});
      q->head = name.text;
      q->line = name.line;
      q->col = name.col;
      return q;
    }
    return iff_expr();
  }

  RawPtr iff_expr() {
    auto a = implies_expr();
    if (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      return raw(Raw::K::Iff, {a, iff_expr()});
    }
    return a;
  }

  RawPtr implies_expr() {
    auto a = or_expr();
    if (lex_.peek().kind == Tok::Implies) {
      lex_.take();
      return raw(Raw::K::Implies, {a, implies_expr()});
    }
    return a;
  }

  RawPtr or_expr() {
    auto a = and_expr();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      a = raw(Raw::K::Or, {a, and_expr()});
    }
    return a;
  }

  RawPtr and_expr() {
    auto a = until_expr();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      a = raw(Raw::K::And, {a, until_expr()});
    }
    return a;
  }

  RawPtr until_expr() {
    auto a = unary();
    Tok k = lex_.peek().kind;
    if (k == Tok::OpU || k == Tok::OpR) {
      lex_.take();
      auto b = until_expr();
      return raw(k == Tok::OpU ? Raw::K::Until : Raw::K::Release, {a, b});
    }
    return a;
  }

  RawPtr unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Not: lex_.take(); return raw(Raw::K::Neg, {unary()});
      case Tok::OpX: lex_.take(); return raw(Raw::K::Next, {unary()});
      case Tok::OpF: lex_.take(); return raw(Raw::K::Ev, {unary()});
      case Tok::OpG: lex_.take(); return raw(Raw::K::Glob, {unary()});
      case Tok::OpE: {
        lex_.take();
        auto q = raw(Raw::K::PathExists, {unary()});
        q->line = t.line; q->col = t.col;
        return q;
      }
      case Tok::OpA: {
        lex_.take();
        auto q = raw(Raw::K::PathForall, {unary()});
        q->line = t.line; q->col = t.col;
        return q;
      }
      case Tok::OpK: {
        lex_.take();
        expect(Tok::LBracket, "'[' after K");
        std::vector<std::string> obs;
        if (lex_.peek().kind != Tok::Semi) {
          obs.push_back(expect(Tok::Ident, "observable proposition").text);
          while (lex_.peek().kind == Tok::Comma) {
            lex_.take();
            obs.push_back(expect(Tok::Ident, "observable proposition").text);
          }
        }
        expect(Tok::Semi, "';' in K[...; pi]");
        Token pi = expect(Tok::Ident, "path variable in K[...; pi]");
        expect(Tok::RBracket, "']' after K[...; pi]");
        auto q = raw(Raw::K::Knowledge, {unary()});
        q->head = pi.text;
        q->obs = std::move(obs);
        return q;
      }
      default:
        return primary();
    }
  }

  RawPtr primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lex_.take();
        auto f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::True: lex_.take(); return raw(Raw::K::True);
      case Tok::False: lex_.take(); return raw(Raw::K::False);
      case Tok::Ident: {
        Token name = lex_.take();
        auto a = raw(Raw::K::Atom);
        a->head = name.text;
        a->line = name.line;
        a->col = name.col;
        if (lex_.peek().kind == Tok::LBracket) {
          lex_.take();
          a->index = expect(Tok::Ident, "trace/path variable index").text;
          a->indexed = true;
          expect(Tok::RBracket, "']' after index");
        }
        return a;
      }
      default:
        lex_.fail("expected a formula");
    }
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) lex_.fail("expected " + what);
    return lex_.take();
  }

  // Usage scan: does `name` occur as an index / as a bare-or-indexed head
  // below `r` (not shadowed by a rebinding)?
  void scan_usage(const RawPtr& r, const std::string& name, bool& asIndex,
                  bool& asHead) {
    switch (r->k) {
      case Raw::K::Atom:
        if (r->indexed && r->index == name) asIndex = true;
        if (r->head == name) asHead = true;
        return;
      case Raw::K::Knowledge:
        if (r->head == name) asIndex = true;
        break;
      case Raw::K::Exists:
      case Raw::K::Forall:
        if (r->head == name) return;  // shadowed
        break;
      default:
        break;
    }
    for (const auto& k : r->kids) scan_usage(k, name, asIndex, asHead);
  }

  void resolve_quantifiers(const RawPtr& r) {
    if (r->k == Raw::K::Exists || r->k == Raw::K::Forall) {
      bool asIndex = false, asHead = false;
      scan_usage(r->kids[0], r->head, asIndex, asHead);
      if (asIndex && asHead)
        throw ParseError(r->line, r->col,
                         "'" + r->head +
                             "' used both as trace variable and proposition");
      bool isTrace = asIndex || (!asHead && allows_trace_vars(logic_));
      if (isTrace)
        traceNames_.insert(r->head);
      else
        propNames_.insert(r->head);
      quantKind_[r.get()] = isTrace;
    }
    for (const auto& k : r->kids) resolve_quantifiers(k);
  }

  HFPtr lower(const RawPtr& r) {
    switch (r->k) {
      case Raw::K::True: return h_true();
      case Raw::K::False: return h_false();
      case Raw::K::Atom: {
        if (r->indexed) {
          if (propNames_.count(r->head))
            return h_tree_prop(r->head, r->index);
          return h_atom(r->head, r->index);
        }
        if (propNames_.count(r->head)) return h_prop(r->head);
        if (logic_ == LogicId::LTL || logic_ == LogicId::QPTL)
          return h_prop(r->head);
        if (logic_ == LogicId::CTLStar) {
          // CTL* atoms refer to the innermost path quantifier; resolved in
          // the path-variable pass below via the pending marker.
          if (pathStack_.empty()) {
            has_free_atoms_ = true;
            return h_atom(r->head, kRootMarker);
          }
          return h_atom(r->head, pathStack_.back());
        }
        throw ParseError(r->line, r->col,
                         "bare proposition '" + r->head +
                             "' is not bound by a propositional quantifier");
      }
      case Raw::K::Neg: return h_neg(lower(r->kids[0]));
      case Raw::K::And: return h_and(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Or: return h_or(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Implies:
        return h_implies(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Iff: return h_iff(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Next: return h_next(lower(r->kids[0]));
      case Raw::K::Until: return h_until(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Release:
        return h_release(lower(r->kids[0]), lower(r->kids[1]));
      case Raw::K::Ev: return h_eventually(lower(r->kids[0]));
      case Raw::K::Glob: return h_globally(lower(r->kids[0]));
      case Raw::K::Exists:
      case Raw::K::Forall: {
        bool isTrace = quantKind_[r.get()];
        bool ex = r->k == Raw::K::Exists;
        auto body = lower(r->kids[0]);
        if (isTrace)
          return ex ? h_exists_trace(r->head, body)
                    : h_forall_trace(r->head, body);
        return ex ? h_exists_prop(r->head, body)
                  : h_forall_prop(r->head, body);
      }
      case Raw::K::PathExists:
      case Raw::K::PathForall: {
        std::string v = "p" + std::to_string(++pathCounter_);
        pathStack_.push_back(v);
        auto body = lower(r->kids[0]);
        pathStack_.pop_back();
        return r->k == Raw::K::PathExists ? h_exists_trace(v, body)
                                          : h_forall_trace(v, body);
      }
      case Raw::K::Knowledge:
        return h_knowledge(r->obs, r->head, lower(r->kids[0]));
    }
    throw ParseError(0, 0, "unreachable");
  }

  static constexpr const char* kRootMarker = "@root";

  // Replaces @root markers by the wrapping root path variable.
  HFPtr substitute_marker(const HFPtr& f, const std::string& v) {
    if (f->kind == HKind::TraceAtom && f->var == kRootMarker)
      return h_atom(f->name, v);
    std::vector<HFPtr> kids;
    for (const auto& k : f->kids) kids.push_back(substitute_marker(k, v));
    return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                                std::move(kids));
  }

  // Renames inner rebindings so bound names are distinct along paths.
  HFPtr rename_duplicates(const HFPtr& f) {
    std::map<std::string, int> inScope;
    int counter = 0;
    return rename_walk(f, inScope, counter);
  }

  HFPtr rename_walk(const HFPtr& f, std::map<std::string, int>& inScope,
                    int& counter) {
    auto bind = [&](const std::string& name, bool isTrace,
                    auto rebuild) -> HFPtr {
      std::string use = name;
      if (inScope[name] > 0) use = name + "_" + std::to_string(++counter);
      ++inScope[name];
      auto body = f->kids[0];
      if (use != name)
        body = isTrace ? subst_trace_var(body, name, use)
                       : subst_prop_var(body, name, use);
      auto lowered = rename_walk(body, inScope, counter);
      --inScope[name];
      return rebuild(use, lowered);
    };
    switch (f->kind) {
      case HKind::ExistsTrace:
        return bind(f->var, true, [](const std::string& v, HFPtr b) {
          return h_exists_trace(v, std::move(b));
        });
      case HKind::ForallTrace:
        return bind(f->var, true, [](const std::string& v, HFPtr b) {
          return h_forall_trace(v, std::move(b));
        });
      case HKind::ExistsProp:
        return bind(f->name, false, [](const std::string& v, HFPtr b) {
          return h_exists_prop(v, std::move(b));
        });
      case HKind::ForallProp:
        return bind(f->name, false, [](const std::string& v, HFPtr b) {
          return h_forall_prop(v, std::move(b));
        });
      default: {
        std::vector<HFPtr> kids;
        for (const auto& k : f->kids)
          kids.push_back(rename_walk(k, inScope, counter));
        return std::make_shared<HF>(f->kind, f->name, f->var, f->obs,
                                    std::move(kids));
      }
    }
  }

  static HFPtr subst_trace_var(const HFPtr& f, const std::string& from,
                               const std::string& to) {
    if ((f->kind == HKind::ExistsTrace || f->kind == HKind::ForallTrace) &&
        f->var == from)
      return f;  // shadowed
    std::string var = f->var == from ? to : f->var;
    std::vector<HFPtr> kids;
    for (const auto& k : f->kids)
      kids.push_back(subst_trace_var(k, from, to));
    return std::make_shared<HF>(f->kind, f->name, var, f->obs,
                                std::move(kids));
  }

  static HFPtr subst_prop_var(const HFPtr& f, const std::string& from,
                              const std::string& to) {
    if ((f->kind == HKind::ExistsProp || f->kind == HKind::ForallProp) &&
        f->name == from)
      return f;
    std::string name = f->name;
    if ((f->kind == HKind::PropAtom || f->kind == HKind::TreePropAtom) &&
        f->name == from)
      name = to;
    std::vector<HFPtr> kids;
    for (const auto& k : f->kids) kids.push_back(subst_prop_var(k, from, to));
    return std::make_shared<HF>(f->kind, name, f->var, f->obs,
                                std::move(kids));
  }

  Lexer lex_;
  LogicId logic_;
  std::set<std::string> traceNames_, propNames_;
  std::map<const Raw*, bool> quantKind_;  // true = trace
  std::vector<std::string> pathStack_;
  int pathCounter_ = 0;
  bool has_free_atoms_ = false;
};

// ---------------------------------------------------------------------
// Relational parsing.

class RelationalParser {
 public:
  RelationalParser(const std::string& text, LogicId logic)
      : lex_(text, false, false), logic_(logic) {}

  RFormula run() {
    RFPtr root = formula();
    if (lex_.peek().kind != Tok::End) lex_.fail("trailing input");
    root = rename_duplicates(root);
    if (auto err = r_check_well_formed(logic_, root))
      throw ParseError(1, 1, *err);
    return RFormula{logic_, root};
  }

 private:
  static bool is_so_name(const std::string& n) {
    return !n.empty() && std::isupper(static_cast<unsigned char>(n[0]));
  }

  RFPtr formula() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Exists || t.kind == Tok::Forall) {
      bool ex = t.kind == Tok::Exists;
      lex_.take();
      Token name = expect(Tok::Ident, "quantified variable name");
      expect(Tok::Dot, "'.' after quantified variable");
      auto body = formula();
      if (is_so_name(name.text))
        return ex ? r_exists_so(name.text, body)
                  : r_forall_so(name.text, body);
      return ex ? r_exists_fo(name.text, body) : r_forall_fo(name.text, body);
    }
    return iff_expr();
  }

  RFPtr iff_expr() {
    auto a = implies_expr();
    if (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      return r_iff(a, iff_expr());
    }
    return a;
  }

  RFPtr implies_expr() {
    auto a = or_expr();
    if (lex_.peek().kind == Tok::Implies) {
      lex_.take();
      return r_implies(a, implies_expr());
    }
    return a;
  }

  RFPtr or_expr() {
    auto a = and_expr();
    while (lex_.peek().kind == Tok::Or) {
      lex_.take();
      a = r_or(a, and_expr());
    }
    return a;
  }

  RFPtr and_expr() {
    auto a = unary();
    while (lex_.peek().kind == Tok::And) {
      lex_.take();
      a = r_and(a, unary());
    }
    return a;
  }

  RFPtr unary() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Not) {
      lex_.take();
      return r_neg(unary());
    }
    return primary();
  }

  RFPtr primary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::LParen: {
        lex_.take();
        auto f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::True: lex_.take(); return r_true();
      case Tok::False: lex_.take(); return r_false();
      case Tok::OpE: {
        lex_.take();
        expect(Tok::LParen, "'(' after E");
        auto a = term();
        expect(Tok::Comma, "',' in E(x, y)");
        auto b = term();
        expect(Tok::RParen, "')'");
        return r_eqlevel(a, b);
      }
      case Tok::Ident:
        if (t.text.size() > 2 && t.text.rfind("P_", 0) == 0) {
          std::string ap = t.text.substr(2);
          lex_.take();
          expect(Tok::LParen, "'(' after predicate");
          auto a = term();
          expect(Tok::RParen, "')'");
          return r_pred(ap, a);
        }
        [[fallthrough]];
      case Tok::KwMin:
      case Tok::KwS: {
        auto a = term();
        const Token& op = lex_.peek();
        switch (op.kind) {
          case Tok::Less: lex_.take(); return r_less(a, term());
          case Tok::Equals: lex_.take(); return r_eq(a, term());
          case Tok::KwIn: {
            lex_.take();
            Token X = expect(Tok::Ident, "set variable");
            if (!is_so_name(X.text))
              throw ParseError(X.line, X.col,
                               "set variables start with an uppercase letter");
            return r_in(a, X.text);
          }
          default:
            lex_.fail("expected '<', '=' or 'in' after term");
        }
      }
      default:
        lex_.fail("expected a formula");
    }
  }

  RTermPtr term() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::KwMin) {
      lex_.take();
      expect(Tok::LParen, "'(' after min");
      Token x = expect(Tok::Ident, "variable in min(x)");
      expect(Tok::RParen, "')'");
      return t_min(x.text);
    }
    if (t.kind == Tok::KwS) {
      lex_.take();
      expect(Tok::LParen, "'(' after S");
      auto inner = term();
      expect(Tok::RParen, "')'");
      return t_succ(inner);
    }
    Token x = expect(Tok::Ident, "term");
    if (is_so_name(x.text))
      throw ParseError(x.line, x.col,
                       "first-order variables start with a lowercase letter");
    return t_var(x.text);
  }

  Token expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k) lex_.fail("expected " + what);
    return lex_.take();
  }

  RFPtr rename_duplicates(const RFPtr& f) {
    std::map<std::string, int> inScope;
    int counter = 0;
    return walk(f, inScope, counter);
  }

  RFPtr walk(const RFPtr& f, std::map<std::string, int>& inScope,
             int& counter) {
    if (r_is_quantifier(f->kind)) {
      std::string use = f->name;
      if (inScope[f->name] > 0) use = f->name + "_" + std::to_string(++counter);
      ++inScope[f->name];
      auto body = f->kids[0];
      if (use != f->name) body = subst(body, f->name, use);
      body = walk(body, inScope, counter);
      --inScope[f->name];
      return std::make_shared<RF>(RF{f->kind, use, nullptr, nullptr, {body}});
    }
    std::vector<RFPtr> kids;
    for (const auto& k : f->kids) kids.push_back(walk(k, inScope, counter));
    return std::make_shared<RF>(RF{f->kind, f->name, f->t1, f->t2,
                                   std::move(kids)});
  }

  static RTermPtr subst_term(const RTermPtr& t, const std::string& from,
                             const std::string& to) {
    if (!t) return nullptr;
    switch (t->kind) {
      case TKind::Var: return t->var == from ? t_var(to) : t;
      case TKind::Min: return t->var == from ? t_min(to) : t;
      case TKind::Succ: return t_succ(subst_term(t->child, from, to));
    }
    return nullptr;
  }

  static RFPtr subst(const RFPtr& f, const std::string& from,
                     const std::string& to) {
    if (r_is_quantifier(f->kind) && f->name == from) return f;  // shadowed
    std::string name = f->name;
    if (f->kind == RKind::InSet && f->name == from) name = to;
    std::vector<RFPtr> kids;
    for (const auto& k : f->kids) kids.push_back(subst(k, from, to));
    return std::make_shared<RF>(RF{f->kind, name, subst_term(f->t1, from, to),
                                   subst_term(f->t2, from, to),
                                   std::move(kids)});
  }

  Lexer lex_;
  LogicId logic_;
};

}  // namespace

Formula parse_temporal(const std::string& text, LogicId logic) {
  if (!is_temporal(logic))
    throw ParseError(1, 1, "logic " + std::string(logic_name(logic)) +
                               " is not temporal");
  return TemporalParser(text, logic).run();
}

RFormula parse_relational(const std::string& text, LogicId logic) {
  if (!is_relational(logic))
    throw ParseError(1, 1, "logic " + std::string(logic_name(logic)) +
                               " is not relational");
  return RelationalParser(text, logic).run();
}

std::string strip_comments(const std::string& text) {
  std::string out;
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') {
      comment = false;
      out += ' ';
      continue;
    }
    if (!comment) out += c;
  }
  return out;
}

}  // namespace hlk
