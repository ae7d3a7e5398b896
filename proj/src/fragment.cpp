#include "hlk/fragment.hpp"

#include <functional>
#include <stdexcept>

#include "hlk/normal_form.hpp"

namespace hlk {

std::string_view fragment_name(FragmentShape s) {
  switch (s) {
    case FragmentShape::ForallStar: return "forall*";
    case FragmentShape::ExistsStar: return "exists*";
    case FragmentShape::ExistsStarForallStar: return "exists*forall*";
    case FragmentShape::ForallExists: return "forall-exists";
    case FragmentShape::Other: return "other";
  }
  return "?";
}

namespace {

FragmentShape shape_of_sequence(const std::vector<bool>& isExists) {
  bool seenForall = false;
  bool existsAfterForall = false;
  int flips = 0;
  bool last = true;
  for (std::size_t i = 0; i < isExists.size(); ++i) {
    if (i == 0)
      last = isExists[i];
    else if (isExists[i] != last) {
      ++flips;
      last = isExists[i];
    }
    if (!isExists[i]) seenForall = true;
    if (isExists[i] && seenForall) existsAfterForall = true;
  }
  bool anyE = false, anyA = false;
  for (bool e : isExists) (e ? anyE : anyA) = true;
  if (!anyE) return FragmentShape::ForallStar;  // includes empty prefix
  if (!anyA) return FragmentShape::ExistsStar;
  if (!existsAfterForall) return FragmentShape::ExistsStarForallStar;
  // forall+ then exists+ exactly
  if (flips == 1 && !isExists.front() && isExists.back())
    return FragmentShape::ForallExists;
  return FragmentShape::Other;
}

// Branching-time classification on NNF trees: collect, for every trace
// quantifier, whether an existential occurs in the scope of a universal.
struct BranchScan {
  bool anyE = false, anyA = false;
  bool existsUnderForall = false;
  int existsUnderForallCount = 0;
  int forallCount = 0;
};

void scan_branching(const HFPtr& f, bool underForall, BranchScan& s) {
  switch (f->kind) {
    case HKind::ExistsTrace:
      s.anyE = true;
      if (underForall) {
        s.existsUnderForall = true;
        ++s.existsUnderForallCount;
      }
      scan_branching(f->kids[0], underForall, s);
      return;
    case HKind::ForallTrace:
      s.anyA = true;
      ++s.forallCount;
      scan_branching(f->kids[0], true, s);
      return;
    default:
      for (const auto& k : f->kids) scan_branching(k, underForall, s);
      return;
  }
}

void collect_prop_positions(const HFPtr& f, std::vector<std::string>& out) {
  if (f->kind == HKind::ExistsProp) out.push_back("E:" + f->name);
  if (f->kind == HKind::ForallProp) out.push_back("A:" + f->name);
  for (const auto& k : f->kids) collect_prop_positions(k, out);
}

}  // namespace

FragmentClass classify_fragment(const Formula& f) {
  FragmentClass out;
  collect_prop_positions(f.root, out.prop_prefix);

  if (is_linear(f.logic)) {
    if (!h_is_prenex(f.root))
      throw std::invalid_argument(
          "classify_fragment: linear-time input must be prenex");
    std::vector<bool> isExists;
    const HF* cur = f.root.get();
    while (h_is_quantifier(cur->kind)) {
      if (cur->kind == HKind::ExistsTrace) {
        isExists.push_back(true);
        ++out.trace_exists;
      } else if (cur->kind == HKind::ForallTrace) {
        isExists.push_back(false);
        ++out.trace_foralls;
      }
      cur = cur->kids[0].get();
    }
    out.shape = shape_of_sequence(isExists);
    return out;
  }

  // Branching time: inspect the NNF tree.
  auto g = is_nnf(f.root) ? f.root : to_nnf(f.root);
  BranchScan s;
  scan_branching(g, false, s);
  if (!s.anyE && !s.anyA) {
    out.shape = FragmentShape::ForallStar;  // closed, quantifier-free body
  } else if (!s.anyA) {
    out.shape = FragmentShape::ExistsStar;
  } else if (!s.anyE) {
    out.shape = FragmentShape::ForallStar;
  } else if (!s.existsUnderForall) {
    out.shape = FragmentShape::ExistsStarForallStar;
  } else if (s.existsUnderForallCount == 1 && s.forallCount == 1) {
    out.shape = FragmentShape::ForallExists;
  } else {
    out.shape = FragmentShape::Other;
  }
  // Count trace quantifiers for reporting.
  std::function<void(const HFPtr&)> count = [&](const HFPtr& h) {
    if (h->kind == HKind::ExistsTrace) ++out.trace_exists;
    if (h->kind == HKind::ForallTrace) ++out.trace_foralls;
    for (const auto& k : h->kids) count(k);
  };
  count(g);
  return out;
}

}  // namespace hlk
