#pragma once

#include <stdexcept>
#include <string>

namespace sigma {

/// Raised when a caller breaks a documented precondition (dimension
/// mismatch, division by zero, out-of-range argument). These are
/// programming errors, not recoverable results.
class ContractError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

// Literal messages stay as const char* so a passing check allocates nothing.
inline void require(bool condition, const char* what) {
    if (!condition) {
        throw ContractError(what);
    }
}

inline void require(bool condition, const std::string& what) {
    if (!condition) {
        throw ContractError(what);
    }
}

}  // namespace sigma
