#pragma once

#include <stdexcept>
#include <string>

namespace qbic {

/* Every failure mode gets its own exception type so callers (and the CLI
   exit-code mapping) can react to the specific condition. */

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// finite_field
struct NotPrimeError : Error { using Error::Error; };
struct ReducibleModulusError : Error { using Error::Error; };
struct FieldTooLargeError : Error { using Error::Error; };
struct CharacteristicMismatchError : Error { using Error::Error; };
struct NoEmbeddingError : Error { using Error::Error; };

// forms and subspaces
struct DimensionMismatchError : Error { using Error::Error; };
struct SingularFormError : Error { using Error::Error; };
struct ZeroFormError : Error { using Error::Error; };
struct ZeroVectorError : Error { using Error::Error; };

// enumeration and verification
struct BudgetExceededError : Error { using Error::Error; };

// exact combinatorics
struct ExactDivisionError : Error { using Error::Error; };
struct ParameterOutOfRangeError : Error { using Error::Error; };

// zeta / Betti extraction
struct PurityViolationError : Error { using Error::Error; };

// input parsing
struct ParseError : Error { using Error::Error; };

}  // namespace qbic
