#pragma once

#include <stdexcept>
#include <string>

#include "hlk/formula.hpp"
#include "hlk/relational.hpp"

namespace hlk {

// Parse diagnostics carry 1-based line/column of the offending token.
struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int l, int c, const std::string& msg)
      : std::runtime_error("parse error at " + std::to_string(l) + ":" +
                           std::to_string(c) + ": " + msg),
        line(l), col(c) {}
};

// Parses a formula of a temporal-style logic. Quantified names are
// classified as trace/path or propositional variables from their usage
// (index position vs. bare occurrence); bound names are alpha-renamed so
// that names are distinct along every root-to-leaf path. Well-formedness
// for the given logic is enforced.
Formula parse_temporal(const std::string& text, LogicId logic);

// Parses a formula of a predicate-style logic. First-order variables are
// spelled with a lowercase first letter, second-order variables with an
// uppercase one.
RFormula parse_relational(const std::string& text, LogicId logic);

// Strips '#' comments, joins lines. File contents -> single formula text.
std::string strip_comments(const std::string& text);

}  // namespace hlk
