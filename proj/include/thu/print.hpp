#pragma once

#include <string>

#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

// Renders a term in the surface syntax: TYPE, juxtaposition application,
// `A -> B` for non-dependent products, `!x : A. B` and `\x : A. b` binders.
// Binder hints are freshened so the output reparses to an alpha-equal term.
std::string show_term(const Term& t);

std::string show_context(const Context& ctx);

}  // namespace thu
