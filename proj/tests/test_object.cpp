#include <algorithm>
#include <tuple>

#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/object.hpp"
#include "support/algebras.hpp"
#include "support/printing.hpp"

using namespace rigid;

namespace {

Vector V(std::initializer_list<Rational> xs) { return Vector(xs); }

const Algebra& rationals() {
  static const Algebra q = polynomial_quotient(Polynomial{0, 1});
  return q;
}

using Triple = std::tuple<unsigned, unsigned, Rational>;

std::vector<Triple> triples(const AnalyzedObject& a) {
  std::vector<Triple> out;
  for (std::size_t i = 0; i < a.decomposition.factors.size(); ++i) {
    const auto& f = a.decomposition.factors[i];
    out.emplace_back(f.delta, f.d, a.multiplicity.scalar[i].value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix permutation(const std::vector<std::size_t>& image) {
  Matrix m(image.size(), image.size());
  for (std::size_t j = 0; j < image.size(); ++j) m(image[j], j) = 1;
  return m;
}

}  // namespace

TEST_CASE("solve_multiplicity examples") {
  SUBCASE("Q with tr(1) = -2") {
    const auto a = analyze(ObjectDatum(rationals(), V({-2})));
    CHECK(a.multiplicity.scalar[0] == Rational(-2));
  }
  SUBCASE("M2(Q) with the matrix trace") {
    const auto a = analyze(ObjectDatum(matrix_algebra(2), V({1, 0, 0, 1})));
    CHECK(a.multiplicity.scalar[0] == Rational(1));
  }
  SUBCASE("Q(i) with the field trace") {
    const auto a = analyze(ObjectDatum(polynomial_quotient(Polynomial{1, 0, 1}), V({2, 0})));
    CHECK(a.multiplicity.scalar[0] == Rational(1));
    CHECK(a.multiplicity.mu[0].size() == 2);
  }
  SUBCASE("Q(i) with a non-scalar multiplicity") {
    // mu = 1 + i: tr(1) = Tr(1 + i) = 2, tr(i) = Tr(i - 1) = -2
    const ObjectDatum obj(polynomial_quotient(Polynomial{1, 0, 1}), V({2, -2}));
    const auto a = analyze(obj);
    CHECK_FALSE(a.multiplicity.scalar[0].has_value());
    CHECK(a.multiplicity.element == V({1, 1}));
    CHECK_THROWS_AS(multiplicity_from_idempotents(obj, a.decomposition), NotScalar);
  }
  SUBCASE("zero trace is rejected") {
    CHECK_THROWS_AS(analyze(ObjectDatum(rationals(), V({0}))), NotInvertible);
  }
}

TEST_CASE("ObjectDatum validation") {
  // On M2(Q), tr(E_01 E_10) = tr(E_00) must equal tr(E_10 E_01) = tr(E_11).
  CHECK_THROWS_AS(ObjectDatum(matrix_algebra(2), V({1, 0, 0, 2})), InvalidObject);
  CHECK_THROWS_AS(ObjectDatum(polynomial_quotient(Polynomial{0, 0, 1}), V({1, 0})), NotSemisimple);
  CHECK_THROWS_AS(ObjectDatum(rationals(), V({1, 2})), InvalidObject);
}

TEST_CASE("multiplicity_from_idempotents examples") {
  const ObjectDatum unit(rationals(), V({1}));
  CHECK(multiplicity_from_idempotents(unit, decompose(unit.algebra())).scalar[0] == Rational(1));
  const ObjectDatum m2(matrix_algebra(2), V({1, 0, 0, 1}));
  CHECK(multiplicity_from_idempotents(m2, decompose(m2.algebra())).scalar[0] == Rational(1));
  const ObjectDatum qi(polynomial_quotient(Polynomial{1, 0, 1}), V({2, 0}));
  const auto dec = decompose(qi.algebra());
  CHECK(multiplicity_from_idempotents(qi, dec).element == solve_multiplicity(qi, dec).element);
}

TEST_CASE("check_integral_type examples") {
  CHECK(check_integral_type(analyze(ObjectDatum(rationals(), V({-2}))).multiplicity).integral);
  const Algebra q3 = direct_product(direct_product(rationals(), rationals()), rationals());
  const auto mixed = analyze(ObjectDatum(q3, V({1, 1, -1})));
  CHECK(check_integral_type(mixed.multiplicity).integral);
  const auto half = check_integral_type(analyze(ObjectDatum(rationals(), V({Rational(1, 2)}))).multiplicity);
  CHECK_FALSE(half.integral);
  CHECK(half.per_factor == std::vector<bool>{false});
}

TEST_CASE("euler_characteristic examples") {
  CHECK(euler_characteristic(ObjectDatum(rationals(), V({1}))) == 1);
  CHECK(euler_characteristic(ObjectDatum(direct_product(rationals(), rationals()), V({3, 5}))) == 8);
}

TEST_CASE("dual_trace examples") {
  SUBCASE("matrix transpose") {
    const ObjectDatum m2(matrix_algebra(2), V({1, 0, 0, 1}));
    const auto dual = analyze(dual_trace(m2, permutation({0, 2, 1, 3})));
    CHECK(dual.multiplicity.scalar[0] == Rational(1));
  }
  SUBCASE("factor swap on Q x Q") {
    const ObjectDatum obj(direct_product(rationals(), rationals()), V({2, 3}));
    const ObjectDatum dual = dual_trace(obj, permutation({1, 0}));
    CHECK(dual.trace() == V({3, 2}));
    CHECK(triples(analyze(obj)) == triples(analyze(dual)));
  }
  SUBCASE("quaternion conjugation") {
    const ObjectDatum obj(quaternion_algebra(-1, -1), V({6, 0, 0, 0}));
    const auto before = analyze(obj);
    CHECK(before.multiplicity.scalar[0] == Rational(3));
    const auto after = analyze(dual_trace(obj, Matrix::diagonal(V({1, -1, -1, -1}))));
    CHECK(triples(before) == triples(after));
  }
  SUBCASE("an automorphism that is not anti") {
    // the identity of M2 reverses no products
    CHECK_THROWS_AS(dual_trace(ObjectDatum(matrix_algebra(2), V({1, 0, 0, 1})), Matrix::identity(4)),
                    NotAntiAutomorphism);
  }
}

TEST_CASE("tensor_relation_check examples") {
  const auto r1 = tensor_relation_check({{1, 1, -1}, {1, 1, -1}, {{1, 1, 1}}});
  CHECK(r1.passed);
  CHECK(r1.m == V({1}));

  const auto r2 = tensor_relation_check({{1, 1, 2}, {1, 1, 3}, {{1, 1, 2}, {2, 2, 1}}});
  CHECK(r2.m == V({1, 4}));
  CHECK(r2.lhs == 6);
  CHECK(r2.rhs == 6);
  CHECK(r2.passed);

  const auto r3 = tensor_relation_check({{1, 2, 1}, {1, 1, 1}, {{3, 1, 1}}});
  CHECK(r3.m == V({Rational(3, 2)}));
  CHECK(r3.m_valid == std::vector<bool>{false});
  CHECK_FALSE(r3.passed);

  // mixed signs: |mu_k| may exceed |mu_i mu_j|, the bound is not asserted
  const auto r4 = tensor_relation_check({{1, 1, 1}, {1, 1, 2}, {{1, 1, 3}, {1, 1, -1}}});
  CHECK(r4.sum_matches);
  CHECK_FALSE(r4.same_sign);
  CHECK(r4.passed);
  const auto r5 = tensor_relation_check({{1, 1, 1}, {1, 1, 1}, {{1, 1, 2}, {1, 1, -1}}});
  CHECK_FALSE(r5.same_sign);
}

TEST_CASE("nilpotence_bounds examples") {
  const auto one = nilpotence_bounds({1}, {1}, 1, 0);
  CHECK(one.kahn == 1);
  for (unsigned n = 1; n <= 6; ++n) {
    const auto b = nilpotence_bounds(std::vector<Integer>(n, 1), std::vector<Integer>(n, 1), n, 0);
    CHECK(b.kahn == (Integer(1) << n) - 1);
    CHECK(b.razmyslov == n * n);
  }
  CHECK(nilpotence_bounds({4}, {2}, 4, 0).kahn == 2);
  CHECK_THROWS_AS(nilpotence_bounds({3}, {2}, 3, 0), DivisibilityViolation);
}

TEST_CASE("solver agrees with the idempotent formula and recovers generated multiplicities") {
  testing::Gen gen(202);
  for (int trial = 0; trial < 40; ++trial) {
    const auto known = testing::random_semisimple(gen);
    Vector mu;
    std::vector<Triple> expected;
    for (const auto& f : known.factors) {
      mu.emplace_back(gen.nonzero(-3, 3));
      expected.emplace_back(f.delta, f.d, mu.back());
    }
    std::sort(expected.begin(), expected.end());
    const ObjectDatum obj(known.algebra, testing::trace_with_multiplicities(known, mu));
    const auto a = analyze(obj, static_cast<std::uint64_t>(trial));
    for (std::size_t j = 0; j < known.algebra.dim(); ++j) {
      const Vector ej = known.algebra.basis(j);
      CHECK(reduced_trace(a.decomposition, known.algebra.multiply(a.multiplicity.element, ej)) == obj.trace()[j]);
    }
    CHECK(triples(a) == expected);
    CHECK(multiplicity_from_idempotents(obj, a.decomposition).element == a.multiplicity.element);

    // Euler additivity
    Rational chi = 0;
    for (const auto& [delta, d, m] : expected) chi += m * (delta * d);
    CHECK(euler_characteristic(obj) == chi);
  }
}

TEST_CASE("perturbing the trace changes the multiplicity") {
  testing::Gen gen(303);
  for (int trial = 0; trial < 20; ++trial) {
    // products of fields are commutative, so any functional is symmetric
    testing::KnownAlgebra known = testing::field_block(testing::random_irreducible(gen, 2));
    if (gen.coin()) known = testing::product(known, testing::rational_block());
    Vector mu(known.factors.size(), Rational(1));
    Vector tr = testing::trace_with_multiplicities(known, mu);
    const auto base = analyze(ObjectDatum(known.algebra, tr));
    tr[static_cast<std::size_t>(gen.integer(0, static_cast<long>(tr.size()) - 1))] += 1;
    try {
      const auto moved = analyze(ObjectDatum(known.algebra, tr));
      CHECK(moved.multiplicity.element != base.multiplicity.element);
    } catch (const NotInvertible&) {
      // the perturbed functional may be degenerate; that also differs
    }
  }
}

TEST_CASE("dual invariance on group algebras with inversion") {
  testing::Gen gen(404);
  const auto table = s3_table();
  std::vector<std::size_t> inv(6);
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      if (table[g][h] == 0) inv[g] = h;
    }
  }
  const auto known = testing::s3_block();
  for (int trial = 0; trial < 10; ++trial) {
    const Vector mu{Rational(gen.nonzero(-3, 3)), Rational(gen.nonzero(-3, 3)), Rational(gen.nonzero(-3, 3))};
    const ObjectDatum obj(known.algebra, testing::trace_with_multiplicities(known, mu));
    CHECK(triples(analyze(obj)) == triples(analyze(dual_trace(obj, permutation(inv)))));
  }
}
