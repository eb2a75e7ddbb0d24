#ifndef GFSIEVE_ERRORS_HPP
#define GFSIEVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfsieve {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define GFSIEVE_DEFINE_ERROR(NAME)                            \
  class NAME : public Error {                                 \
   public:                                                    \
    explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
  }

GFSIEVE_DEFINE_ERROR(ZeroElement);
GFSIEVE_DEFINE_ERROR(AllCoordinatesVanish);
GFSIEVE_DEFINE_ERROR(ZeroPoint);
GFSIEVE_DEFINE_ERROR(BoxTooLarge);
GFSIEVE_DEFINE_ERROR(BoundTooSmall);
GFSIEVE_DEFINE_ERROR(EmptySet);
GFSIEVE_DEFINE_ERROR(HypothesisFailed);
GFSIEVE_DEFINE_ERROR(HypothesisViolated);
GFSIEVE_DEFINE_ERROR(NoKernel);
GFSIEVE_DEFINE_ERROR(DegreeTooSmall);
GFSIEVE_DEFINE_ERROR(ChainInvalid);
GFSIEVE_DEFINE_ERROR(UnsupportedField);
GFSIEVE_DEFINE_ERROR(BudgetExceeded);
GFSIEVE_DEFINE_ERROR(KindMismatch);

#undef GFSIEVE_DEFINE_ERROR

}  // namespace gfsieve

#endif
