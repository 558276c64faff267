#ifndef RIGID_OBJECT_HPP_
#define RIGID_OBJECT_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rigid/algebra.hpp"

namespace rigid {

// An object seen through its endomorphism algebra and the categorical trace
// on it. The constructor checks tr(xy) = tr(yx) on basis pairs
// (InvalidObject) and semisimplicity (NotSemisimple).
class ObjectDatum {
 public:
  ObjectDatum(Algebra algebra, Vector trace);

  const Algebra& algebra() const { return algebra_; }
  const Vector& trace() const { return trace_; }
  Rational trace_of(const Vector& x) const;

 private:
  Algebra algebra_;
  Vector trace_;
};

struct MultiplicityVector {
  std::vector<Vector> mu;                      // per factor, coordinates in its center basis
  std::vector<std::optional<Rational>> scalar;  // set when mu_i is a multiple of e_i
  Vector element;                              // sum of the mu_i as an element of A
  bool all_scalar() const;
};

// The unique central mu with Trd(mu f) = tr(f) for all f. Throws
// Inconsistent (no central solution) or NotInvertible.
MultiplicityVector solve_multiplicity(const ObjectDatum& obj, const Decomposition& dec);

// mu_i = tr(e_i) / (delta_i d_i). Throws NotScalar naming the first factor
// where the solver finds a non-scalar mu_i.
MultiplicityVector multiplicity_from_idempotents(const ObjectDatum& obj, const Decomposition& dec);

struct AnalyzedObject {
  ObjectDatum object;
  Decomposition decomposition;
  MultiplicityVector multiplicity;
};
AnalyzedObject analyze(const ObjectDatum& obj, std::uint64_t seed = 0);

struct IntegralityReport {
  std::vector<bool> per_factor;
  bool integral = true;
};
IntegralityReport check_integral_type(const MultiplicityVector& mv);

// tr(1)
Rational euler_characteristic(const ObjectDatum& obj);

// Trace transported along a linear anti-automorphism given by its matrix
// (column j is the image of basis element j). Throws NotAntiAutomorphism.
ObjectDatum dual_trace(const ObjectDatum& obj, const Matrix& anti);

struct FactorInvariants {
  unsigned delta = 1;
  unsigned d = 1;
  Rational mu;
};

struct TensorRelationDatum {
  FactorInvariants left;
  FactorInvariants right;
  std::vector<FactorInvariants> product;
};

struct TensorRelationReport {
  Vector m;                   // delta_k d_k / (d_i d_j)
  std::vector<bool> m_valid;  // nonnegative integer
  Rational lhs;               // mu_i mu_j
  Rational rhs;               // sum m_k mu_k
  bool sum_matches = false;
  bool same_sign = false;     // all mu_k of one sign
  bool bound_holds = true;    // |mu_k| <= |mu_i mu_j|, only checked when same_sign
  bool passed = false;
};
TensorRelationReport tensor_relation_check(const TensorRelationDatum& datum);

struct NilpotenceBounds {
  Integer kahn;       // prod(|mu_i|/e_i + 1) - 1
  Integer razmyslov;  // (|chi+| + |chi-|)^2
};
// Throws DivisibilityViolation unless every e_i divides |mu_i|.
NilpotenceBounds nilpotence_bounds(const std::vector<Integer>& mu_abs, const std::vector<Integer>& e_divisors,
                                   const Integer& chi_plus_abs, const Integer& chi_minus_abs);

}  // namespace rigid

#endif  // RIGID_OBJECT_HPP_
