#ifndef RIGID_ALGEBRA_HPP_
#define RIGID_ALGEBRA_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rigid/matrix.hpp"
#include "rigid/polynomial.hpp"

namespace rigid {

// Finite-dimensional associative Q-algebra given by structure constants:
// e_i * e_j = sum_k c(i, j, k) e_k. Elements are coordinate vectors in the
// basis e_0..e_{n-1}. Associativity on basis triples and the two-sided unit
// are checked by the constructor (InvalidAlgebra).
class Algebra {
 public:
  Algebra() = default;
  // `constants` has n*n*n entries, index (i*n + j)*n + k.
  Algebra(std::size_t dim, Vector constants, Vector unit);

  std::size_t dim() const { return dim_; }
  const Vector& unit() const { return unit_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  const Vector& constants() const { return c_; }

  Vector basis(std::size_t i) const { return unit_vector(dim_, i); }
  Vector multiply(const Vector& x, const Vector& y) const;
  Vector power(const Vector& x, unsigned n) const;
  // Evaluates p(x) with p's constant term mapped to a multiple of the unit.
  Vector evaluate(const Polynomial& p, const Vector& x) const;

  // Matrix of y -> x*y (columns are images of basis vectors).
  Matrix left_multiplication(const Vector& x) const;
  Rational regular_trace(const Vector& x) const { return left_multiplication(x).trace(); }
  std::optional<Vector> inverse(const Vector& x) const;
  bool is_invertible(const Vector& x) const { return left_multiplication(x).determinant() != 0; }

  // Minimal polynomial of x over Q (monic).
  Polynomial minimal_polynomial(const Vector& x) const;
  // Minimal polynomial of x inside the corner algebra with unit e, i.e. the
  // smallest monic p with p(x) = 0 when constants mean multiples of e.
  Polynomial minimal_polynomial(const Vector& x, const Vector& e) const;

  std::vector<Vector> center_basis() const;
  bool is_commutative() const;

  void check_element(const Vector& x) const;

 private:
  std::size_t dim_ = 0;
  Vector c_;
  Vector unit_;
};

struct SimpleFactor {
  Vector idempotent;
  std::vector<Vector> factor_basis;  // basis of e A e
  std::vector<Vector> center_basis;  // basis of Z(e A e)
  Polynomial center_minpoly;         // minimal polynomial generating the center
  unsigned delta = 0;
  unsigned d = 0;
  std::size_t dim() const { return factor_basis.size(); }
};

struct Decomposition {
  Algebra algebra;
  std::vector<SimpleFactor> factors;
};

// Nondegeneracy of (x, y) -> Tr_regular(xy).
bool check_semisimple(const Algebra& a);

// Wedderburn decomposition. The center is computed by linear algebra, a
// primitive element is searched with a seeded PRNG, and central idempotents
// come from the factorization of its minimal polynomial. Factors are sorted
// by (delta, d, idempotent coordinates), so the result does not depend on the
// seed. Throws NotSemisimple, NotPerfectSquare.
Decomposition decompose(const Algebra& a, std::uint64_t seed = 0);

Rational reduced_trace(const Decomposition& dec, const Vector& x);
// Nrd(e_i - e_i x t), degree delta_i d_i, constant term 1.
Polynomial reduced_charpoly(const Decomposition& dec, std::size_t factor, const Vector& x);
// Nrd(e_i x) from the top coefficient of reduced_charpoly.
Rational reduced_norm(const Decomposition& dec, std::size_t factor, const Vector& x);

// Coordinates of a center element of factor i in that factor's center basis.
Vector center_coordinates(const SimpleFactor& f, const Vector& z);

// --- builders ---------------------------------------------------------------

// Group algebra from a multiplication table on {0..n-1}; element 0 is the
// identity.
Algebra group_algebra(const std::vector<std::vector<std::size_t>>& table);
Algebra cyclic_group_algebra(std::size_t n);
// Z/a x Z/b, element (i, j) at index i*b + j.
Algebra abelian_group_algebra(std::size_t a, std::size_t b);
// S3 with elements ordered e, (12), (13), (23), (123), (132).
Algebra s3_group_algebra();
std::vector<std::vector<std::size_t>> s3_table();
// M_k(Q) on the elementary matrices E_ij at index i*k + j.
Algebra matrix_algebra(std::size_t k);
// (a, b)_Q with basis 1, i, j, ij.
Algebra quaternion_algebra(const Rational& a, const Rational& b);
// Q[t]/(p) on the power basis; p must be nonconstant.
Algebra polynomial_quotient(const Polynomial& p);
Algebra direct_product(const Algebra& a, const Algebra& b);
// Same algebra in the basis given by the columns of p (invertible):
// new basis vector j is sum_i p(i, j) e_i.
Algebra change_basis(const Algebra& a, const Matrix& p);

}  // namespace rigid

#endif  // RIGID_ALGEBRA_HPP_
