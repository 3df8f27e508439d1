#pragma once

#include <string>

#include "thu/parse.hpp"
#include "thu/rewrite.hpp"
#include "thu/signature.hpp"

namespace thu {

struct RunOptions {
  long fuel = kDefaultFuel;
  // Initial ambient theory: a catalog name, or "" / "empty" for the empty
  // theory. #REQUIRE replaces the ambient theory mid-script.
  std::string theory;
  bool keep_going = false;   // report failures and continue
  bool records = false;      // STATUS<TAB>COMMAND<TAB>PAYLOAD lines
  bool classify_checks = false;  // treat #CHECK as #CLASSIFY
};

struct RunResult {
  int exit_code = 0;  // 0 ok, 1 failed statement, 2 syntax error
  std::string output;
};

// Parses and executes a script against the ambient theory. `filename` only
// decorates text-mode messages.
RunResult run_script(const std::string& source, const std::string& filename,
                     const RunOptions& options = {});

// Resolves a theory name for --theory / #REQUIRE.
Theory ambient_theory(const std::string& name);

// Free identifiers that match a declared constant become constants; binder
// variables and the rest stay variables.
Term resolve_constants(const Theory& theory, const Term& t);

}  // namespace thu
