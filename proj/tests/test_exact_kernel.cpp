#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/factor.hpp"
#include "rigid/matrix.hpp"
#include "rigid/series.hpp"
#include "support/generators.hpp"
#include "support/printing.hpp"

using namespace rigid;

namespace {

Polynomial P(std::initializer_list<long> c) {
  Vector v;
  for (long x : c) v.emplace_back(x);
  return Polynomial(v);
}

RationalFunction inv_lin_product(std::initializer_list<long> roots) {
  Polynomial den = Polynomial::constant(1);
  for (long a : roots) den *= P({1, -a});
  return RationalFunction(Polynomial::constant(1), den);
}

// Brute force: does a monic integer quartic have a rational root or a
// factorization into monic integer quadratics with |coefficients| <= bound?
bool quartic_has_small_factor(const Polynomial& f, long bound) {
  for (long r = -bound; r <= bound; ++r) {
    if (f(Rational(r)) == 0) return true;
  }
  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long d = -bound; d <= bound; ++d) {
          if (P({b, a, 1}) * P({d, c, 1}) == f) return true;
        }
      }
    }
  }
  return false;
}

Polynomial product_of(const std::vector<Factor>& fs) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& f : fs) p *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

}  // namespace

TEST_CASE("rationals parse and print in p/q form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -5 ")) == "-5");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/-2"), DomainError);
}

TEST_CASE("factor_over_Q examples") {
  SUBCASE("difference of squares") {
    auto fs = factor_over_Q(P({-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == P({-1, 1}));
    CHECK(fs[1].factor == P({1, 1}));
    CHECK(fs[0].multiplicity == 1);
  }
  SUBCASE("t^2 + 1 is irreducible") {
    auto fs = factor_over_Q(P({1, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor == P({1, 0, 1}));
  }
  SUBCASE("cyclotomic quintic piece agrees with a brute-force search") {
    const Polynomial f = P({1, 1, 1, 1, 1});
    const bool oracle_reducible = quartic_has_small_factor(f, 4);
    CHECK_FALSE(oracle_reducible);
    CHECK(is_irreducible(f) == !oracle_reducible);
  }
  SUBCASE("constants factor to nothing") { CHECK(factor_over_Q(Polynomial::constant(5)).empty()); }
  SUBCASE("non-monic rational input") {
    // (2t - 1)^2 (3t + 2) / 7
    const Polynomial f = (P({-1, 2}).pow(2) * P({2, 3})) * Rational(1, 7);
    auto fs = factor_over_Q(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].factor == Polynomial{Rational(-1, 2), 1});
    CHECK(fs[0].multiplicity == 2);
    CHECK(fs[1].factor == Polynomial{Rational(2, 3), 1});
    CHECK(product_of(fs) * f.leading() == f);
  }
  SUBCASE("Swinnerton-Dyer style polynomial needs recombination") {
    // x^4 - 10x^2 + 1 is irreducible but splits modulo every prime
    auto fs = factor_over_Q(P({1, 0, -10, 0, 1}));
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].factor.degree() == 4);
  }
  SUBCASE("cyclotomic t^12 - 1") {
    auto fs = factor_over_Q(P({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
    CHECK(fs.size() == 6);  // Phi_1, Phi_2, Phi_3, Phi_4, Phi_6, Phi_12
    CHECK(product_of(fs) == P({-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}));
  }
}

TEST_CASE("factor_over_Q reproduces generated products") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 60; ++trial) {
    Rational lead(gen.nonzero(-5, 5), gen.nonzero(1, 4));
    lead.canonicalize();
    Polynomial f = Polynomial::constant(lead);
    const int pieces = static_cast<int>(gen.integer(1, 4));
    for (int i = 0; i < pieces; ++i) {
      const int d = static_cast<int>(gen.integer(1, 4));
      Vector c(static_cast<std::size_t>(d) + 1);
      for (auto& x : c) x = gen.integer(-4, 4);
      c.back() = gen.nonzero(1, 3);
      f *= Polynomial(c).pow(static_cast<unsigned>(gen.integer(1, 2)));
    }
    const auto fs = factor_over_Q(f);
    CHECK(product_of(fs) * f.leading() == f);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      CHECK(fs[i].factor.leading() == 1);
      for (std::size_t j = i + 1; j < fs.size(); ++j) CHECK(fs[i].factor != fs[j].factor);
      // each returned factor must itself be irreducible
      const auto again = factor_over_Q(fs[i].factor);
      CHECK(again.size() == 1);
    }
  }
}

TEST_CASE("poly_nth_root") {
  CHECK(poly_nth_root(P({1, 2, 1}), 2) == P({1, 1}));
  CHECK_THROWS_AS(poly_nth_root(P({1, 1, 1}), 2), NotAPerfectPower);
  const Polynomial base = P({1, 0, 1});
  CHECK(poly_nth_root(base.pow(3), 3) == base);
  CHECK(poly_nth_root(base, 1) == base);
}

TEST_CASE("series_expand examples") {
  CHECK(series_expand(inv_lin_product({1}), 4).coefficients == Vector{1, 1, 1, 1});
  CHECK(series_expand(inv_lin_product({2}), 4).coefficients == Vector{1, 2, 4, 8});
  const RationalFunction f(P({1, -3}), P({1, -1}));
  CHECK(series_expand(f, 3).coefficients == Vector{1, -2, -2});
  CHECK_THROWS_AS(series_expand(RationalFunction(P({1}), P({0, 1})), 3), PoleAtZero);
}

TEST_CASE("rational_reconstruct examples") {
  CHECK(rational_reconstruct({{1, 1, 1, 1, 1}}, 0, 1) == inv_lin_product({1}));
  CHECK(rational_reconstruct({{1, 2, 4, 8, 16}}, 0, 1) == inv_lin_product({2}));
  const RationalFunction target = inv_lin_product({2, 3});
  REQUIRE(series_expand(target, 5).coefficients == Vector{1, 5, 19, 65, 211});
  CHECK(rational_reconstruct({{1, 5, 19, 65, 211}}, 1, 2) == target);
  // 1, 0, 0, 1 cannot come from a degree (0, 1) function
  CHECK_THROWS_AS(rational_reconstruct({{1, 0, 0, 1}}, 0, 1), NoReconstruction);
}

TEST_CASE("series round trip on generated functions") {
  testing::Gen gen(3);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalFunction f = gen.zeta_like();
    const std::size_t db = static_cast<std::size_t>(std::max(f.num().degree(), f.den().degree()));
    const auto s = series_expand(f, 2 * db + 1);
    CHECK(rational_reconstruct(s, db, db) == f);
  }
}

TEST_CASE("hadamard examples") {
  CHECK(hadamard(inv_lin_product({2}), inv_lin_product({3})) == inv_lin_product({6}));
  const RationalFunction f(P({1, -1, 3}), P({1, 4}));
  CHECK(hadamard(f, inv_lin_product({1})) == f);
  CHECK(hadamard(inv_lin_product({1, 2}), inv_lin_product({3})) == inv_lin_product({3, 6}));
}

TEST_CASE("hadamard law: commutative, associative, distributive") {
  testing::Gen gen(5);
  for (int trial = 0; trial < 25; ++trial) {
    const RationalFunction f = gen.zeta_like(2), g = gen.zeta_like(2), h = gen.zeta_like(2);
    const auto fg = hadamard(f, g);
    CHECK(fg == hadamard(g, f));
    CHECK(series_expand(hadamard(fg, h), 20) == series_expand(hadamard(f, hadamard(g, h)), 20));
    CHECK(series_expand(hadamard(f, g * h), 20) == series_expand(fg * hadamard(f, h), 20));
  }
}

TEST_CASE("lambda and sigma examples") {
  CHECK(lambda_op(inv_lin_product({2, 3}), 2) == inv_lin_product({6}));
  const RationalFunction f(P({1, 2}), P({1, -1, 5}));
  CHECK(lambda_op(f, 1) == f);
  CHECK(sigma_op(f, 1) == f);
  CHECK(lambda_op(inv_lin_product({5, 7}), 3).is_one());
  // S^2 of a rank-2 positive object: eigenvalues a^2, ab, b^2
  CHECK(sigma_op(inv_lin_product({2, 3}), 2) == inv_lin_product({4, 6, 9}));
  // lambda^2 of a negative rank-1 object is sigma^2 of the positive one
  CHECK(lambda_op(RationalFunction(P({1, -2})), 2) == inv_lin_product({4}));
}

TEST_CASE("lambda vanishes above the rank of a positive object") {
  testing::Gen gen(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = static_cast<int>(gen.integer(1, 4));
    Polynomial den = Polynomial::constant(1);
    for (int i = 0; i < r; ++i) den *= P({1, -gen.nonzero(-4, 4)});
    const RationalFunction f(Polynomial::constant(1), den);
    CHECK(lambda_op(f, static_cast<unsigned>(r) + 1).is_one());
    CHECK_FALSE(lambda_op(f, static_cast<unsigned>(r)).is_one());
  }
}

TEST_CASE("Newton identity sum_{i+j=k} (-1)^i lambda^i sigma^j vanishes on power sums") {
  testing::Gen gen(23);
  for (int trial = 0; trial < 8; ++trial) {
    const RationalFunction f = gen.zeta_like(2);
    for (unsigned k = 1; k <= 3; ++k) {
      Vector total(13, Rational(0));
      for (unsigned i = 0; i <= k; ++i) {
        const Vector e = log_power_sums(lambda_op(f, i), 12);
        const Vector h = log_power_sums(sigma_op(f, k - i), 12);
        for (std::size_t n = 1; n <= 12; ++n) total[n] += (i % 2 == 0 ? 1 : -1) * e[n] * h[n];
      }
      for (std::size_t n = 1; n <= 12; ++n) CHECK(total[n] == 0);
    }
  }
}

TEST_CASE("ord_at_one") {
  CHECK(ord_at_one(inv_lin_product({1})) == -1);
  CHECK(ord_at_one(RationalFunction(P({1, -1}).pow(2))) == 2);
  CHECK(ord_at_one(inv_lin_product({2})) == 0);
}

TEST_CASE("matrix charpoly matches the cofactor determinant on small cases") {
  testing::Gen gen(29);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 4));
    const Matrix m = gen.integer_matrix(n, -3, 3);
    const Polynomial cp = m.charpoly();
    CHECK(cp.degree() == static_cast<int>(n));
    // evaluate det(x I - m) at a few integers independently
    for (long x = -2; x <= 2; ++x) {
      CHECK(cp(Rational(x)) == (Matrix::identity(n) * Rational(x) - m).determinant());
    }
    CHECK(m.evaluate(cp).is_zero());  // Cayley-Hamilton
  }
}

TEST_CASE("empty matrices") {
  const Matrix e(0, 0);
  REQUIRE(e.inverse().has_value());
  CHECK(e.inverse()->rows() == 0);
  CHECK(e.determinant() == 1);
  CHECK(e.charpoly() == Polynomial::constant(1));
  CHECK(e.rank() == 0);
}
