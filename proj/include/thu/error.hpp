#pragma once

#include <stdexcept>
#include <string>

namespace thu {

// Machine-readable failure codes, stable across the CLI records format.
enum class ErrorCode {
  // signature
  DuplicateConstant,
  OpenType,
  UnknownConstant,
  BadLhsShape,
  EscapedVariable,
  OutsideSignature,
  // rewriting
  UnsupportedPattern,
  FuelExhausted,
  // typing
  IllFormedContext,
  UnknownVariable,
  NotAFunction,
  DomainMismatch,
  UntypableSort,
  IllFormedDomain,
  TypeMismatch,
  MissingAnnotation,
  ReservedConstant,
  // catalog / fragments
  UnknownSubTheory,
  MissingDependency,
  OutsideFragment,
  ReCheckFailed,
  // encoders
  DuplicateSymbol,
  UnknownSymbol,
  ArityMismatch,
  NonFunctionalSpec,
  // frontend
  SyntaxError,
  UsageError,
};

const char* error_code_name(ErrorCode code);

struct Error : std::runtime_error {
  ErrorCode code;
  int line = 0;    // 1-based when set, 0 when not tied to source text
  int column = 0;

  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code(code) {}
  Error(ErrorCode code, const std::string& message, int line, int column)
      : std::runtime_error(message), code(code), line(line), column(column) {}
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace thu
