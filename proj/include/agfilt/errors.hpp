#ifndef AGFILT_ERRORS_HPP
#define AGFILT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace agfilt {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define AGFILT_ERROR(Name)                                                     \
    class Name final : public Error {                                          \
      public:                                                                  \
        explicit Name(const std::string& msg) : Error(#Name ": " + msg) {}     \
    }

// field construction / arithmetic
AGFILT_ERROR(CompositeModulus);
AGFILT_ERROR(ReducibleModulus);
AGFILT_ERROR(SpecMismatch);
AGFILT_ERROR(DivisionByZero);

// curves and points
AGFILT_ERROR(FieldMismatch);
AGFILT_ERROR(SingularCurve);
AGFILT_ERROR(UnsupportedCharacteristic);
AGFILT_ERROR(PointNotOnCurve);

// Riemann-Roch spaces and codes
AGFILT_ERROR(NegativeDegree);
AGFILT_ERROR(EvaluationAtPole);
AGFILT_ERROR(PointAtPole);
AGFILT_ERROR(EmptyCode);
AGFILT_ERROR(SearchTooLarge);

// filtrations
AGFILT_ERROR(DegreeTooLarge);
AGFILT_ERROR(LengthMismatch);
AGFILT_ERROR(NotASubset);
AGFILT_ERROR(HypothesisUnmet);

// arcs
AGFILT_ERROR(ZeroColumn);
AGFILT_ERROR(TooManySubsets);

// jets
AGFILT_ERROR(VerticalTangent);

// surfaces
AGFILT_ERROR(ParityViolation);

// reproduce runner
AGFILT_ERROR(InternalInconsistency);

#undef AGFILT_ERROR

}  // namespace agfilt

#endif
