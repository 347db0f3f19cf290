#pragma once

#include <stdexcept>
#include <string>

namespace surfcode {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define SURFCODE_DEFINE_ERROR(Name) \
  struct Name : Error {             \
    explicit Name(const std::string& w) : Error(w) {} \
  }

// field construction / arithmetic
SURFCODE_DEFINE_ERROR(NotPrimeError);
SURFCODE_DEFINE_ERROR(NotIrreducibleError);
SURFCODE_DEFINE_ERROR(TooLargeError);
SURFCODE_DEFINE_ERROR(MixedFieldError);
SURFCODE_DEFINE_ERROR(DivisionByZeroError);

// geometry
SURFCODE_DEFINE_ERROR(ArityMismatchError);

// invariants and bounds
SURFCODE_DEFINE_ERROR(NonIntegralGenusError);
SURFCODE_DEFINE_ERROR(InvalidGeneraError);
SURFCODE_DEFINE_ERROR(NegativeDefectError);
SURFCODE_DEFINE_ERROR(NegativeParameterError);
SURFCODE_DEFINE_ERROR(NonIntegralError);

// codes
SURFCODE_DEFINE_ERROR(EmptySupportError);
SURFCODE_DEFINE_ERROR(LengthMismatchError);
SURFCODE_DEFINE_ERROR(BudgetExceededError);

// I/O and general input validation
SURFCODE_DEFINE_ERROR(ParseError);
SURFCODE_DEFINE_ERROR(InvalidInputError);

#undef SURFCODE_DEFINE_ERROR

}  // namespace surfcode
