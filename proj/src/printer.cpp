#include "hlk/printer.hpp"

#include <sstream>

namespace hlk {

namespace {

// Precedence levels, low to high; used to decide parenthesisation.
// 0 quantifier scope, 1 iff, 2 implies, 3 or, 4 and, 5 until/release,
// 6 unary, 7 atom.
int h_prec(HKind k) {
  switch (k) {
    case HKind::ExistsTrace:
    case HKind::ForallTrace:
    case HKind::ExistsProp:
    case HKind::ForallProp:
      return 0;
    case HKind::Iff: return 1;
    case HKind::Implies: return 2;
    case HKind::Or: return 3;
    case HKind::And: return 4;
    case HKind::Until:
    case HKind::Release: return 5;
    case HKind::Neg:
    case HKind::Next:
    case HKind::Eventually:
    case HKind::Globally:
    case HKind::Knowledge: return 6;
    default: return 7;
  }
}

void h_print(const HFPtr& f, int parent, std::ostringstream& os) {
  int prec = h_prec(f->kind);
  bool paren = prec < parent;
  if (paren) os << '(';
  switch (f->kind) {
    case HKind::True: os << "true"; break;
    case HKind::False: os << "false"; break;
    case HKind::TraceAtom: os << f->name << '[' << f->var << ']'; break;
    case HKind::PropAtom: os << f->name; break;
    case HKind::TreePropAtom: os << f->name << '[' << f->var << ']'; break;
    case HKind::Neg:
      os << '!';
      h_print(f->kids[0], prec + 1, os);
      break;
    case HKind::Next:
      os << "X ";
      h_print(f->kids[0], prec, os);
      break;
    case HKind::Eventually:
      os << "F ";
      h_print(f->kids[0], prec, os);
      break;
    case HKind::Globally:
      os << "G ";
      h_print(f->kids[0], prec, os);
      break;
    case HKind::And:
      h_print(f->kids[0], prec, os);
      os << " & ";
      h_print(f->kids[1], prec + 1, os);
      break;
    case HKind::Or:
      h_print(f->kids[0], prec, os);
      os << " | ";
      h_print(f->kids[1], prec + 1, os);
      break;
    case HKind::Implies:
      h_print(f->kids[0], prec + 1, os);
      os << " -> ";
      h_print(f->kids[1], prec, os);
      break;
    case HKind::Iff:
      h_print(f->kids[0], prec + 1, os);
      os << " <-> ";
      h_print(f->kids[1], prec, os);
      break;
    case HKind::Until:
      h_print(f->kids[0], prec + 1, os);
      os << " U ";
      h_print(f->kids[1], prec, os);
      break;
    case HKind::Release:
      h_print(f->kids[0], prec + 1, os);
      os << " R ";
      h_print(f->kids[1], prec, os);
      break;
    case HKind::ExistsTrace:
      os << "exists " << f->var << ". ";
      h_print(f->kids[0], 0, os);
      break;
    case HKind::ForallTrace:
      os << "forall " << f->var << ". ";
      h_print(f->kids[0], 0, os);
      break;
    case HKind::ExistsProp:
      os << "exists " << f->name << ". ";
      h_print(f->kids[0], 0, os);
      break;
    case HKind::ForallProp:
      os << "forall " << f->name << ". ";
      h_print(f->kids[0], 0, os);
      break;
    case HKind::Knowledge: {
      os << "K[";
      for (std::size_t i = 0; i < f->obs.size(); ++i) {
        if (i) os << ", ";
        os << f->obs[i];
      }
      os << "; " << f->var << "] ";
      h_print(f->kids[0], prec + 1, os);
      break;
    }
  }
  if (paren) os << ')';
}

int r_prec(RKind k) {
  switch (k) {
    case RKind::ExistsFO:
    case RKind::ForallFO:
    case RKind::ExistsSO:
    case RKind::ForallSO:
      return 0;
    case RKind::Iff: return 1;
    case RKind::Implies: return 2;
    case RKind::Or: return 3;
    case RKind::And: return 4;
    case RKind::Neg: return 6;
    default: return 7;
  }
}

void r_print(const RFPtr& f, int parent, std::ostringstream& os) {
  int prec = r_prec(f->kind);
  bool paren = prec < parent;
  if (paren) os << '(';
  switch (f->kind) {
    case RKind::True: os << "true"; break;
    case RKind::False: os << "false"; break;
    case RKind::Pred:
      os << "P_" << f->name << '(' << render_term(f->t1) << ')';
      break;
    case RKind::InSet:
      os << render_term(f->t1) << " in " << f->name;
      break;
    case RKind::Eq:
      os << render_term(f->t1) << " = " << render_term(f->t2);
      break;
    case RKind::Less:
      os << render_term(f->t1) << " < " << render_term(f->t2);
      break;
    case RKind::EqualLevel:
      os << "E(" << render_term(f->t1) << ", " << render_term(f->t2) << ')';
      break;
    case RKind::Neg:
      os << '!';
      r_print(f->kids[0], prec + 1, os);
      break;
    case RKind::And:
      r_print(f->kids[0], prec, os);
      os << " & ";
      r_print(f->kids[1], prec + 1, os);
      break;
    case RKind::Or:
      r_print(f->kids[0], prec, os);
      os << " | ";
      r_print(f->kids[1], prec + 1, os);
      break;
    case RKind::Implies:
      r_print(f->kids[0], prec + 1, os);
      os << " -> ";
      r_print(f->kids[1], prec, os);
      break;
    case RKind::Iff:
      r_print(f->kids[0], prec + 1, os);
      os << " <-> ";
      r_print(f->kids[1], prec, os);
      break;
    case RKind::ExistsFO:
    case RKind::ExistsSO:
      os << "exists " << f->name << ". ";
      r_print(f->kids[0], 0, os);
      break;
    case RKind::ForallFO:
    case RKind::ForallSO:
      os << "forall " << f->name << ". ";
      r_print(f->kids[0], 0, os);
      break;
  }
  if (paren) os << ')';
}

}  // namespace

std::string render_term(const RTermPtr& t) {
  switch (t->kind) {
    case TKind::Var: return t->var;
    case TKind::Min: return "min(" + t->var + ")";
    case TKind::Succ: return "S(" + render_term(t->child) + ")";
  }
  return "?";
}

std::string render(const HFPtr& f) {
  std::ostringstream os;
  h_print(f, 0, os);
  return os.str();
}

std::string render(const Formula& f) { return render(f.root); }

std::string render(const RFPtr& f) {
  std::ostringstream os;
  r_print(f, 0, os);
  return os.str();
}

std::string render(const RFormula& f) { return render(f.root); }

}  // namespace hlk
