#ifndef VOLENT_ERRORS_HPP
#define VOLENT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace volent {

/// Stable error categories, mapped to CLI exit codes (see tools/).
enum class ErrorCode {
  InvalidInput,         // malformed complexes, presentations, specs, files
  Unsupported,          // no backend can canonicalize the word problem
  BudgetExceeded,       // state cap hit during enumeration
  NonRealizable,        // edge lengths violate simplex inequalities
  EmptyFiber,
  Disconnected,
  NotSmallCancellation,
  MismatchedGenerators,
  DimensionTooHigh,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Error unsupported_error(const std::string& what) {
  return Error(ErrorCode::Unsupported, what);
}
inline Error budget_error(const std::string& what) {
  return Error(ErrorCode::BudgetExceeded, what);
}
inline Error invalid_input(const std::string& what) {
  return Error(ErrorCode::InvalidInput, what);
}

}  // namespace volent

#endif
