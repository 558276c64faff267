#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/zeta.hpp"
#include "support/algebras.hpp"
#include "support/printing.hpp"

using namespace rigid;

namespace {

Vector V(std::initializer_list<Rational> xs) { return Vector(xs); }

AnalyzedObject unit_object() { return analyze(ObjectDatum(polynomial_quotient(Polynomial{0, 1}), V({1}))); }

RationalFunction geometric(long a) { return RationalFunction(Polynomial::constant(1), Polynomial{1, -a}); }

// A random object of integral type over a random semisimple algebra.
AnalyzedObject random_object(testing::Gen& gen) {
  const auto known = testing::random_semisimple(gen);
  Vector mu;
  for (std::size_t i = 0; i < known.factors.size(); ++i) mu.emplace_back(gen.nonzero(-2, 2));
  return analyze(ObjectDatum(known.algebra, testing::trace_with_multiplicities(known, mu)));
}

Vector random_unit(testing::Gen& gen, const Algebra& a) {
  while (true) {
    Vector f = testing::random_element(gen, a.dim(), 2);
    if (a.is_invertible(f)) return f;
  }
}

}  // namespace

TEST_CASE("zeta examples") {
  const auto unit = unit_object();
  CHECK(zeta(unit, V({1})).zeta == geometric(1));
  const auto h1 = analyze(ObjectDatum(polynomial_quotient(Polynomial{0, 1}), V({-2})));
  const auto z = zeta(h1, V({1}));
  CHECK(z.zeta == RationalFunction(Polynomial{1, -1}.pow(2)));
  CHECK(z.chi == -2);
  CHECK(z.per_factor.at(0).exponent == 2);
  const auto half = analyze(ObjectDatum(polynomial_quotient(Polynomial{0, 1}), V({Rational(1, 2)})));
  CHECK_THROWS_AS(zeta(half, V({1})), NotIntegralType);
}

TEST_CASE("zeta_series_check examples") {
  CHECK(zeta_series_check(unit_object(), V({1}), 6));
  testing::Gen gen(7);
  const auto m2 = analyze(ObjectDatum(matrix_algebra(2), V({1, 0, 0, 1})));
  for (int i = 0; i < 5; ++i) CHECK(zeta_series_check(m2, testing::random_element(gen, 4), 8));

  // negative control: shift every multiplicity by one
  AnalyzedObject corrupted = m2;
  corrupted.multiplicity.scalar[0] = *corrupted.multiplicity.scalar[0] + 1;
  CHECK_FALSE(zeta_series_check(corrupted, V({1, 2, 3, 4}), 8));
}

TEST_CASE("functional equation examples") {
  const auto unit = unit_object();
  const auto r = functional_equation_check(unit, V({1}));
  CHECK(r.holds);
  CHECK(r.chi == 1);
  CHECK(r.det == 1);
  // Z(1, 1/t) = 1/(1 - 1/t) = -t/(1 - t)
  CHECK(r.lhs == RationalFunction(Polynomial{0, -1}, Polynomial{1, -1}));

  // Q[Z/4] with the regular trace: every multiplicity is 1
  const auto z4 = analyze(ObjectDatum(cyclic_group_algebra(4), V({4, 0, 0, 0})));
  testing::Gen gen(8);
  for (int i = 0; i < 10; ++i) CHECK(functional_equation_check(z4, random_unit(gen, z4.object.algebra())).holds);
  CHECK_THROWS_AS(functional_equation_check(z4, V({1, 1, 1, 1})), NotInvertible);
}

TEST_CASE("additivity and tensor examples") {
  const auto unit = unit_object();
  CHECK(zeta_additivity_check(unit, V({1}), unit, V({1})));
  CHECK(matrix_zeta(kronecker(Matrix::diagonal(V({2})), Matrix::diagonal(V({3})))) == geometric(6));
  CHECK(zeta_tensor_check(Matrix::diagonal(V({2})), Matrix::diagonal(V({3}))));
  testing::Gen gen(9);
  for (int i = 0; i < 10; ++i) {
    CHECK(zeta_tensor_check(gen.integer_matrix(2, -3, 3), gen.integer_matrix(3, -3, 3)));
  }
}

TEST_CASE("zeta properties on random objects") {
  testing::Gen gen(10);
  for (int trial = 0; trial < 30; ++trial) {
    const auto obj = random_object(gen);
    const Algebra& a = obj.object.algebra();
    const Vector f = random_unit(gen, a);
    const Vector g = random_unit(gen, a);
    const auto z = zeta(obj, f);
    CHECK(series_expand(z.zeta, 1).coefficients == V({1}));
    Rational expected_gap = 0;
    for (std::size_t i = 0; i < obj.decomposition.factors.size(); ++i) {
      const auto& fac = obj.decomposition.factors[i];
      expected_gap -= *obj.multiplicity.scalar[i] * (fac.delta * fac.d);
    }
    CHECK(Rational(z.zeta.num().degree() - z.zeta.den().degree()) == expected_gap);
    CHECK(zeta_series_check(obj, f, 12));
    CHECK(functional_equation_check(obj, f).holds);
    CHECK(*zeta(obj, a.unit()).det == 1);
    CHECK(*zeta(obj, a.multiply(f, g)).det == *z.det * *zeta(obj, g).det);
    // applying t -> 1/t twice is the identity
    CHECK(substitute_reciprocal(substitute_reciprocal(z.zeta)) == z.zeta);

    const auto other = random_object(gen);
    CHECK(zeta_additivity_check(obj, f, other, testing::random_element(gen, other.object.algebra().dim())));
  }
}
