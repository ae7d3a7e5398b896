#pragma once

#include <string>
#include <vector>

#include "hlk/formula.hpp"

namespace hlk {

// Quantifier shape over *trace/path* quantification only; propositional
// quantifiers do not affect the class and are reported separately.
enum class FragmentShape {
  ForallStar,
  ExistsStar,
  ExistsStarForallStar,
  ForallExists,
  Other,
};

struct FragmentClass {
  FragmentShape shape = FragmentShape::ExistsStar;
  // Positions/polarity of propositional quantifiers in the prenex prefix
  // ("E"/"A" per prefix slot), or encountered in syntax order for
  // branching-time formulas.
  std::vector<std::string> prop_prefix;
  int trace_exists = 0;
  int trace_foralls = 0;
};

std::string_view fragment_name(FragmentShape s);

// Classification is purely syntactic. Linear-time logics must be prenex;
// HyperCTL*-family input is inspected in NNF (no negations above
// quantifiers). Throws std::invalid_argument on non-prenex linear input.
FragmentClass classify_fragment(const Formula& f);

}  // namespace hlk
