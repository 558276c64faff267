#ifndef RIGID_ERRORS_HPP_
#define RIGID_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rigid {

// Base of every failure raised by the library. Each subclass names one
// contract violation; callers that only care about "something went wrong"
// catch rigid::Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define RIGID_DECLARE_ERROR(Name)                          \
  class Name : public Error {                              \
   public:                                                 \
    explicit Name(const std::string& what) : Error(what) {} \
  }

// exact kernel
RIGID_DECLARE_ERROR(NotAPerfectPower);
RIGID_DECLARE_ERROR(PoleAtZero);
RIGID_DECLARE_ERROR(NoReconstruction);
RIGID_DECLARE_ERROR(DomainError);

// algebras
RIGID_DECLARE_ERROR(InvalidAlgebra);
RIGID_DECLARE_ERROR(NotSemisimple);
RIGID_DECLARE_ERROR(NotPerfectSquare);

// objects
RIGID_DECLARE_ERROR(InvalidObject);
RIGID_DECLARE_ERROR(NotInvertible);
RIGID_DECLARE_ERROR(Inconsistent);
RIGID_DECLARE_ERROR(NotAntiAutomorphism);
RIGID_DECLARE_ERROR(DivisibilityViolation);
RIGID_DECLARE_ERROR(NotIntegralType);
RIGID_DECLARE_ERROR(NotScalar);

// category data
RIGID_DECLARE_ERROR(InvalidCategory);
RIGID_DECLARE_ERROR(ExponentNotIntegral);

// realized objects
RIGID_DECLARE_ERROR(InvalidRealizedObject);
RIGID_DECLARE_ERROR(CommonFactor);

// motives and curves
RIGID_DECLARE_ERROR(NotWeil);
RIGID_DECLARE_ERROR(NotIrreducible);
RIGID_DECLARE_ERROR(SingularCurve);
RIGID_DECLARE_ERROR(HasseViolation);
RIGID_DECLARE_ERROR(CountMismatch);
RIGID_DECLARE_ERROR(UnsupportedField);

#undef RIGID_DECLARE_ERROR

// Raised by JSON readers; `pointer` is a JSON pointer to the offending node.
class SchemaError : public Error {
 public:
  SchemaError(std::string pointer, const std::string& message)
      : Error(pointer + ": " + message), pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace rigid

#endif  // RIGID_ERRORS_HPP_
