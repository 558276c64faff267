#ifndef RIGID_ZETA_HPP_
#define RIGID_ZETA_HPP_

#include <optional>
#include <vector>

#include "rigid/object.hpp"
#include "rigid/series.hpp"

namespace rigid {

struct ZetaFactor {
  Polynomial nrd;    // Nrd(e_i - e_i f t)
  Integer exponent;  // -mu_i
};

struct ZetaResult {
  RationalFunction zeta;
  std::vector<ZetaFactor> per_factor;
  Rational chi;
  std::optional<Rational> det;  // only for invertible f
};

// Product formula prod_i Nrd(e_i - e_i f t)^(-mu_i). Throws NotIntegralType
// unless every mu_i is a rational integer.
ZetaResult zeta(const AnalyzedObject& obj, const Vector& f);

// exp(sum_k tr(f^k) t^k / k) against the product formula, n coefficients.
bool zeta_series_check(const AnalyzedObject& obj, const Vector& f, std::size_t n);

// z(1/t) as a rational function.
RationalFunction substitute_reciprocal(const RationalFunction& z);

struct FunctionalEquationReport {
  Rational chi;
  Rational det;
  RationalFunction lhs;  // Z(f^-1, 1/t)
  RationalFunction rhs;  // (-t)^chi det(f) Z(f, t)
  bool holds = false;
};
// Throws NotInvertible when f is not a unit of the algebra.
FunctionalEquationReport functional_equation_check(const AnalyzedObject& obj, const Vector& f);

// 1/det(1 - m t): the zeta function of m acting on an even vector space.
RationalFunction matrix_zeta(const Matrix& m);

bool zeta_additivity_check(const AnalyzedObject& a, const Vector& fa, const AnalyzedObject& b, const Vector& fb);
bool zeta_tensor_check(const Matrix& a, const Matrix& b);

}  // namespace rigid

#endif  // RIGID_ZETA_HPP_
