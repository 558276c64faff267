#ifndef RIGID_POLYNOMIAL_HPP_
#define RIGID_POLYNOMIAL_HPP_

#include <string>
#include <utility>
#include <vector>

#include "rigid/rational.hpp"

namespace rigid {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The coefficient vector never carries trailing zeros, so the zero
// polynomial is the empty vector and degree() == -1 for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);
  static Polynomial x() { return monomial(1, 1); }
  // Product of (t - r) over the given roots.
  static Polynomial from_roots(const Vector& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Vector& coefficients() const { return coeffs_; }
  Rational coeff(int i) const;
  Rational leading() const;
  Rational constant_term() const { return coeff(0); }

  Rational operator()(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  // Euclidean division; throws DomainError on a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }
  bool divisible_by(const Polynomial& d) const { return divmod(d).second.is_zero(); }

  Polynomial pow(unsigned n) const;
  Polynomial derivative() const;
  Polynomial monic() const;
  // p(c * t)
  Polynomial scale_variable(const Rational& c) const;
  // t^n * p(1/t); requires n >= degree().
  Polynomial reversed(int n) const;
  Polynomial reversed() const { return reversed(degree()); }
  // Shift by t^k (k may be negative only if the low coefficients vanish).
  Polynomial shifted(int k) const;
  Polynomial truncated(int n) const;

  // Multiplicity of r as a root (0 when p(r) != 0); -1 for the zero polynomial.
  int root_multiplicity(const Rational& r) const;

  // Lowest-terms integer representation: p = scale * primitive with primitive
  // having integer coprime coefficients and positive leading coefficient.
  std::pair<Rational, std::vector<Integer>> primitive_integer() const;

  std::string to_string(char var = 't') const;

 private:
  void normalize();
  Vector coeffs_;
};

// Monic gcd (zero only if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  // monic
  Polynomial s;
  Polynomial t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

// Inverse of a modulo m; throws DomainError if gcd(a, m) != 1.
Polynomial inverse_mod(const Polynomial& a, const Polynomial& m);

bool is_squarefree(const Polynomial& p);

}  // namespace rigid

#endif  // RIGID_POLYNOMIAL_HPP_
