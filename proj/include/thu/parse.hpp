#pragma once

#include <string>
#include <vector>

#include "thu/signature.hpp"
#include "thu/term.hpp"

namespace thu {

// One surface-syntax statement. Idents parse to free variables; the script
// runner resolves them against the ambient theory, so `subject`/`annotation`
// here still call constants variables.
struct Statement {
  enum class Kind { Symbol, Rule, Check, Infer, Normalize, Conv, Classify, Require };
  Kind kind = Kind::Check;
  int line = 1;
  int column = 1;
  std::string name;   // Symbol: constant name; Require: theory name
  Term subject;       // Symbol: declared type; commands: first term
  Term annotation;    // Check/Classify: expected type; Conv: right-hand term
  // rule statements; the front spine is split into name and left-hand side
  // only once declared constants are known
  Term rule_front;
  Term rule_rhs;
  Context rule_meta;
};

using Script = std::vector<Statement>;

// Statements end with ';'; comments run from "//" to end of line.
// Terms: TYPE, idents, application by juxtaposition, "A -> B" right
// associative, "!x : A. B" products, "\x : A. b" abstractions, parentheses.
// Idents may contain '-' when the next character continues the word, so
// "theory-u" is one ident while "a --> b" and "A -> B" split as expected.
Script parse(const std::string& source);

// A single term, for command lines and tests. Trailing input is an error.
Term parse_term_text(const std::string& source);

}  // namespace thu
