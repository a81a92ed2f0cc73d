#ifndef LCWB_ERROR_HPP
#define LCWB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lcwb {

enum class ErrorCode {
  NonHomogeneousInput,
  NonMonomialDenominator,
  NotPrime,
  SearchExhausted,
  ZeroModule,
  AssIncomplete,
  CapExceeded,
  Unstabilized,
  HypothesisUnverifiable,
  UnsupportedPrime,
  UnsupportedLocalization,
  NotIntoIdealTimesModule,
  PreconditionFailed,
  NonFunctorialTransitions,
  PluginWithoutBicomplex,
  UnknownSuite,
  SyntaxError,
  NameError,
  TypeMismatch,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonHomogeneousInput: return "NonHomogeneousInput";
    case ErrorCode::NonMonomialDenominator: return "NonMonomialDenominator";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::ZeroModule: return "ZeroModule";
    case ErrorCode::AssIncomplete: return "AssIncomplete";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Unstabilized: return "Unstabilized";
    case ErrorCode::HypothesisUnverifiable: return "HypothesisUnverifiable";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::UnsupportedLocalization: return "UnsupportedLocalization";
    case ErrorCode::NotIntoIdealTimesModule: return "NotIntoIdealTimesModule";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::NonFunctorialTransitions: return "NonFunctorialTransitions";
    case ErrorCode::PluginWithoutBicomplex: return "PluginWithoutBicomplex";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NameError: return "NameError";
    case ErrorCode::TypeMismatch: return "TypeMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace lcwb

#endif
