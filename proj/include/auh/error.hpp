#pragma once

#include <stdexcept>
#include <string>

namespace auh {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define AUH_DEFINE_ERROR(name)              \
  class name : public Error {               \
   public:                                  \
    using Error::Error;                     \
  }

AUH_DEFINE_ERROR(InvalidDistribution);
AUH_DEFINE_ERROR(DimensionMismatch);
AUH_DEFINE_ERROR(InvalidNode);
AUH_DEFINE_ERROR(InvalidSymbol);
AUH_DEFINE_ERROR(TruncatedStream);
AUH_DEFINE_ERROR(DomainError);
AUH_DEFINE_ERROR(BadParam);
AUH_DEFINE_ERROR(EmptyFeasibleSet);
AUH_DEFINE_ERROR(MoveNotApplicable);
AUH_DEFINE_ERROR(NotAUHStart);
AUH_DEFINE_ERROR(ConvergenceFailure);
AUH_DEFINE_ERROR(ParseError);

#undef AUH_DEFINE_ERROR

}  // namespace auh
