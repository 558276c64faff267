#include <functional>

#include "doctest.h"
#include "rigid/errors.hpp"
#include "rigid/tate.hpp"
#include "support/categories.hpp"
#include "support/printing.hpp"

using namespace rigid;

namespace {

SimpleClass cls(std::string name, unsigned delta, unsigned d, long mu, Polynomial p) {
  return {std::move(name), delta, d, mu, std::move(p), false};
}

const Polynomial kTMinus1{-1, 1};

// Rep_Q(Z/2 x Z/2) with F = 1: four rational characters, all with P = t - 1.
CategoryDatum trivial_frobenius_fixture() {
  return CategoryDatum({testing::unit_class(), cls("chi1", 1, 1, 1, kTMinus1), cls("chi2", 1, 1, 1, kTMinus1),
                        cls("chi3", 1, 1, 1, kTMinus1)});
}

// Every multiplicity vector with entries <= bound, last index fastest.
void for_each_spec(std::size_t n, unsigned bound, const std::function<void(const ObjectSpec&)>& visit) {
  ObjectSpec m(n, 0);
  while (true) {
    visit(m);
    std::size_t i = n;
    while (i > 0 && m[i - 1] == bound) m[--i] = 0;
    if (i == 0) return;
    ++m[i - 1];
  }
}

// Brute-force verdicts for (ii) and (iv) over the whole grid.
std::pair<bool, bool> enumerate_ii_iv(const CategoryDatum& cat, unsigned bound) {
  bool ii = true, iv = true;
  std::vector<std::pair<ObjectSpec, RationalFunction>> seen;
  for_each_spec(cat.size(), bound, [&](const ObjectSpec& m) {
    const RationalFunction z = zeta_of_object(cat, m);
    if (ord_at_one(z) != -static_cast<int>(m[cat.unit_index()])) ii = false;
    for (const auto& [other, zo] : seen) {
      if (zo == z) iv = false;
    }
    seen.emplace_back(m, z);
  });
  return {ii, iv};
}

// Small categories that mix shared minimal polynomials, t - 1 and exponents
// of different sizes.
CategoryDatum random_small_category(testing::Gen& gen) {
  const std::vector<Polynomial> pool{kTMinus1, Polynomial{1, 1}, Polynomial{-2, 1}, Polynomial{1, 0, 1},
                                     Polynomial{5, -3, 1}};
  std::vector<SimpleClass> simples{testing::unit_class()};
  const int count = static_cast<int>(gen.integer(1, 4));
  for (int i = 0; i < count; ++i) {
    const Polynomial& p = pool[static_cast<std::size_t>(gen.integer(0, 4))];
    const auto deg = static_cast<unsigned>(p.degree());
    simples.push_back(cls("S" + std::to_string(i), deg * static_cast<unsigned>(gen.integer(1, 2)),
                          static_cast<unsigned>(gen.integer(1, 2)), gen.nonzero(-2, 2), p));
  }
  return CategoryDatum(std::move(simples));
}

}  // namespace

TEST_CASE("category validation") {
  const auto unit = testing::unit_class();
  CHECK_NOTHROW(CategoryDatum({unit}));
  CHECK_THROWS_AS(CategoryDatum({}), InvalidCategory);
  CHECK_THROWS_AS(CategoryDatum({unit, cls("1", 1, 1, 1, Polynomial{-2, 1})}), InvalidCategory);
  // reducible P
  CHECK_THROWS_AS(CategoryDatum({unit, cls("S", 2, 1, 1, Polynomial{-1, 0, 1})}), InvalidCategory);
  // non-monic P
  CHECK_THROWS_AS(CategoryDatum({unit, cls("S", 1, 1, 1, Polynomial{-1, 2})}), InvalidCategory);
  // deg P does not divide delta
  CHECK_THROWS_AS(CategoryDatum({unit, cls("S", 3, 1, 1, Polynomial{1, 0, 1})}), InvalidCategory);
  CHECK_THROWS_AS(CategoryDatum({unit, cls("S", 1, 1, 0, kTMinus1)}), InvalidCategory);
  SimpleClass second_unit = unit;
  second_unit.name = "1b";
  CHECK_THROWS_AS(CategoryDatum({unit, second_unit}), InvalidCategory);
  SimpleClass bad_unit = unit;
  bad_unit.mu = -1;
  CHECK_THROWS_AS(CategoryDatum({bad_unit}), InvalidCategory);
  CHECK_THROWS_AS(CategoryDatum({cls("S", 1, 1, 1, kTMinus1)}), InvalidCategory);
}

TEST_CASE("zeta_of_object examples") {
  const CategoryDatum cat({testing::unit_class(), cls("L", 1, 1, 1, Polynomial{-3, 1}),
                           cls("H", 2, 1, -1, Polynomial{5, -1, 1})});
  CHECK(zeta_of_object(cat, spec_from_names(cat, {{"1", 1}})) ==
        RationalFunction(Polynomial::constant(1), Polynomial{1, -1}));
  CHECK(zeta_of_object(cat, spec_from_names(cat, {{"L", 1}})) ==
        RationalFunction(Polynomial::constant(1), Polynomial{1, -3}));
  CHECK(zeta_of_object(cat, spec_from_names(cat, {{"H", 1}})) == RationalFunction(Polynomial{1, -1, 5}));
  CHECK(zeta_of_object(cat, ObjectSpec(3, 0)).is_one());
  CHECK_THROWS_AS(spec_from_names(cat, {{"X", 1}}), InvalidCategory);
  for (unsigned m = 0; m <= 6; ++m) CHECK(ord_at_one(zeta_of_object(cat, spec_from_names(cat, {{"1", m}}))) == -int(m));
}

TEST_CASE("equivalence examples") {
  const CategoryDatum good({testing::unit_class(), cls("S", 2, 1, -1, Polynomial{5, -3, 1})});
  const auto r = equivalence_report(good);
  CHECK(r.i.passed);
  CHECK(r.ii.passed);
  CHECK(r.iii.passed);
  CHECK(r.iv.passed);
  CHECK(r.v.passed);
  CHECK(r.vi.passed);
  CHECK(r.consistent());
  CHECK(*r.ii.bound == 2);

  // two classes sharing t^2 + 1
  const CategoryDatum shared({testing::unit_class(), cls("A", 2, 1, -1, Polynomial{1, 0, 1}),
                              cls("B", 2, 1, -1, Polynomial{1, 0, 1})});
  const auto s = equivalence_report(shared);
  CHECK(s.i.passed);
  CHECK(s.ii.passed);
  CHECK_FALSE(s.iii.passed);
  CHECK_FALSE(s.iv.passed);
  CHECK_FALSE(s.v.passed);
  CHECK(s.vi.passed);
  CHECK(s.iv.first_violation.has_value());
  CHECK(zeta_of_object(shared, *s.iv.first_violation) == zeta_of_object(shared, *s.iv.second_violation));
  CHECK(*s.iv.first_violation != *s.iv.second_violation);
}

// F = 1 on representations of a finite abelian group: (vi) holds, (i) fails.
// Kept as a permanent regression.
TEST_CASE("trivial Frobenius regression: (vi) does not imply (i)") {
  const auto cat = trivial_frobenius_fixture();
  const auto r = equivalence_report(cat);
  CHECK(r.vi.passed);
  CHECK_FALSE(r.i.passed);
  CHECK_FALSE(r.ii.passed);
  CHECK_FALSE(r.iii.passed);
  CHECK_FALSE(r.iv.passed);
  CHECK_FALSE(r.v.passed);
  CHECK(r.i.witnesses == std::vector<std::string>{"chi1", "chi2", "chi3"});
  CHECK(r.consistent());
  CHECK_FALSE(r.ii_unbounded);
  CHECK_FALSE(r.iv_unbounded);
}

TEST_CASE("bounded checks agree with full enumeration") {
  testing::Gen gen(40);
  for (int trial = 0; trial < 120; ++trial) {
    const auto cat = random_small_category(gen);
    for (unsigned bound : {1U, 2U}) {
      const auto [ii, iv] = enumerate_ii_iv(cat, bound);
      CHECK(check_condition_ii(cat, bound).passed == ii);
      CHECK(check_condition_iv(cat, bound).passed == iv);
    }
  }
}

TEST_CASE("first violations are genuine") {
  testing::Gen gen(41);
  for (int trial = 0; trial < 60; ++trial) {
    const auto cat = random_small_category(gen);
    const auto ii = check_condition_ii(cat);
    if (!ii.passed) {
      const auto& m = *ii.first_violation;
      CHECK(ord_at_one(zeta_of_object(cat, m)) != -static_cast<int>(m[cat.unit_index()]));
    }
    const auto iv = check_condition_iv(cat);
    if (!iv.passed) {
      CHECK(*iv.first_violation != *iv.second_violation);
      CHECK(zeta_of_object(cat, *iv.first_violation) == zeta_of_object(cat, *iv.second_violation));
      for (auto x : *iv.first_violation) CHECK(x <= 2);
      for (auto x : *iv.second_violation) CHECK(x <= 2);
    }
  }
}

TEST_CASE("conditions agree on categories of group representations") {
  testing::Gen gen(42);
  int failing = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto u = testing::closed_universe(gen);
    const auto r = equivalence_report(u.category);
    CAPTURE(u.a);
    CAPTURE(u.b);
    CAPTURE(u.gx);
    CAPTURE(u.gy);
    CAPTURE(u.super);
    CAPTURE(u.parity_in_f);
    CHECK(r.exact_agree);
    CHECK(r.ii_unbounded == r.i.passed);
    CHECK(r.iv_unbounded == r.i.passed);
    // a bounded violation is a violation
    if (!r.ii.passed) CHECK_FALSE(r.ii_unbounded);
    if (!r.iv.passed) CHECK_FALSE(r.iv_unbounded);
    if (r.i.passed) CHECK(r.vi.passed);
    failing += r.i.passed ? 0 : 1;
  }
  // both regimes occur
  CHECK(failing > 10);
  CHECK(failing < 140);
}

TEST_CASE("Tate regime passes every check") {
  testing::Gen gen(43);
  for (int trial = 0; trial < 100; ++trial) {
    const auto r = equivalence_report(testing::tate_regime(gen));
    CHECK(r.consistent());
    CHECK(r.i.passed);
    CHECK(r.iv.passed);
    CHECK(r.vi.passed);
    CHECK(r.ii_unbounded);
    CHECK(r.iv_unbounded);
  }
}

TEST_CASE("kimura examples") {
  const CategoryDatum cat({testing::unit_class(), cls("L", 1, 1, 1, Polynomial{-3, 1}),
                           cls("E", 2, 1, 1, Polynomial{5, -1, 1}), cls("H", 2, 1, -1, Polynomial{5, -1, 1}),
                           cls("M", 2, 2, -1, Polynomial{1, 0, 1})});
  const auto entries = kimura_grading_check(cat);
  REQUIRE(entries.size() == 5);
  CHECK(entries[1].power == 2);
  CHECK(entries[2].power == 3);
  CHECK(entries[2].positive);
  CHECK(entries[3].power == 3);
  CHECK_FALSE(entries[3].positive);
  CHECK(entries[4].power == 5);
  for (const auto& e : entries) {
    CHECK(e.checked);
    CHECK(e.vanishes);
  }
  // one less is not enough: Lambda^chi of a rank-chi object is its determinant
  const RationalFunction z = zeta_of_object(cat, spec_from_names(cat, {{"E", 1}}));
  CHECK(lambda_op(z, 2) == RationalFunction(Polynomial::constant(1), Polynomial{1, -5}));
  CHECK_FALSE(kimura_grading_check(cat, 2)[2].checked);
}

TEST_CASE("kimura vanishing on random classes") {
  testing::Gen gen(44);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cat = testing::spec_random_category(gen, 3);
    for (const auto& e : kimura_grading_check(cat)) {
      CHECK(e.positive == (e.chi > 0));
      if (e.checked) CHECK(e.vanishes);
    }
  }
}
