#include "thu/error.hpp"

namespace thu {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateConstant: return "DuplicateConstant";
    case ErrorCode::OpenType: return "OpenType";
    case ErrorCode::UnknownConstant: return "UnknownConstant";
    case ErrorCode::BadLhsShape: return "BadLhsShape";
    case ErrorCode::EscapedVariable: return "EscapedVariable";
    case ErrorCode::OutsideSignature: return "OutsideSignature";
    case ErrorCode::UnsupportedPattern: return "UnsupportedPattern";
    case ErrorCode::FuelExhausted: return "FuelExhausted";
    case ErrorCode::IllFormedContext: return "IllFormedContext";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::NotAFunction: return "NotAFunction";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::UntypableSort: return "UntypableSort";
    case ErrorCode::IllFormedDomain: return "IllFormedDomain";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::MissingAnnotation: return "MissingAnnotation";
    case ErrorCode::ReservedConstant: return "ReservedConstant";
    case ErrorCode::UnknownSubTheory: return "UnknownSubTheory";
    case ErrorCode::MissingDependency: return "MissingDependency";
    case ErrorCode::OutsideFragment: return "OutsideFragment";
    case ErrorCode::ReCheckFailed: return "ReCheckFailed";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NonFunctionalSpec: return "NonFunctionalSpec";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Error";
}

}  // namespace thu
