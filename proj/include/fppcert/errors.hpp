#pragma once
#include <stdexcept>
#include <string>

namespace fpp {

// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define FPP_DEFINE_ERROR(Name)                                              \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    }

FPP_DEFINE_ERROR(DenominatorNotInvertible);
FPP_DEFINE_ERROR(DenominatorVanished);
FPP_DEFINE_ERROR(RingMismatch);
FPP_DEFINE_ERROR(IndexOutOfRange);
FPP_DEFINE_ERROR(ParseError);
FPP_DEFINE_ERROR(InvalidField);
FPP_DEFINE_ERROR(ExponentOverflow);
FPP_DEFINE_ERROR(DivisionByZero);
FPP_DEFINE_ERROR(CoefficientFieldUnsupported);
FPP_DEFINE_ERROR(NotMinimal);
FPP_DEFINE_ERROR(EnumerationTooLarge);
FPP_DEFINE_ERROR(BudgetExceeded);
FPP_DEFINE_ERROR(ConstraintViolation);
FPP_DEFINE_ERROR(ExtractionFailed);
FPP_DEFINE_ERROR(InsufficientPoints);
FPP_DEFINE_ERROR(SeventhRootUndefined);
FPP_DEFINE_ERROR(ConfigError);

#undef FPP_DEFINE_ERROR

}  // namespace fpp
