#pragma once

#include <string>

#include "hlk/formula.hpp"
#include "hlk/relational.hpp"

namespace hlk {

// Canonical text form; parse(render(f), logic) is structurally equal to f.
std::string render(const HFPtr& f);
std::string render(const Formula& f);
std::string render(const RFPtr& f);
std::string render(const RFormula& f);
std::string render_term(const RTermPtr& t);

}  // namespace hlk
