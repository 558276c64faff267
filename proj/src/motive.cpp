#include "rigid/motive.hpp"

#include <string>

#include "rigid/errors.hpp"
#include "rigid/factor.hpp"
#include "rigid/finite_field.hpp"

namespace rigid {

namespace {

bool is_prime_power(const Integer& q) {
  if (q < 2) return false;
  for (unsigned long k = 1; k <= mpz_sizeinbase(q.get_mpz_t(), 2); ++k) {
    Integer r;
    if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), k) != 0 && mpz_probab_prime_p(r.get_mpz_t(), 40) > 0) return true;
  }
  return false;
}

}  // namespace

void validate_weil(const WeilDatum& w) {
  if (!is_prime_power(w.q)) throw NotWeil("q = " + w.q.get_str() + " is not a prime power");
  const int n = static_cast<int>(2 * w.g);
  if (w.p1.degree() != n || w.p1.leading() != 1) throw NotWeil("p1 must be monic of degree 2g");
  for (const auto& c : w.p1.coefficients()) {
    if (!is_integer(c)) throw NotWeil("p1 must have integer coefficients");
  }
  // t^2g p1(q/t) = q^g p1(t), i.e. a_i q^i = q^g a_{2g-i}
  for (int i = 0; i <= n; ++i) {
    Integer qi, qg;
    mpz_pow_ui(qi.get_mpz_t(), w.q.get_mpz_t(), static_cast<unsigned long>(i));
    mpz_pow_ui(qg.get_mpz_t(), w.q.get_mpz_t(), w.g);
    if (w.p1.coeff(i) * qi != w.p1.coeff(n - i) * qg) {
      throw NotWeil("coefficients of t^" + std::to_string(i) + " and t^" + std::to_string(n - i) +
                    " do not pair to q");
    }
  }
}

MotiveDatum from_weil(const WeilDatum& w) {
  validate_weil(w);
  MotiveDatum m;
  m.q = w.q;
  m.g = w.g;
  const RationalFunction h1(Polynomial::constant(1), inverse_form(w.p1));
  for (unsigned i = 0; i <= 2 * w.g; ++i) {
    const long sign = i % 2 == 0 ? 1 : -1;
    const long rank = binomial(2 * w.g, i).get_si();
    Polynomial p;
    if (i == 0) {
      p = Polynomial{-1, 1};
    } else {
      const RationalFunction ext = lambda_op(h1, i);
      if (!ext.num().is_constant() || ext.den().degree() != rank) {
        throw DomainError("exterior power of h1 has an unexpected shape");
      }
      p = ext.den().reversed(static_cast<int>(rank));
    }
    m.components.push_back({p, sign * rank, sign});
  }
  return m;
}

RationalFunction variety_zeta(const MotiveDatum& m) {
  Polynomial num = Polynomial::constant(1), den = Polynomial::constant(1);
  for (std::size_t i = 0; i < m.components.size(); ++i) {
    (i % 2 == 1 ? num : den) *= inverse_form(m.components[i].p);
  }
  return RationalFunction(num, den);
}

namespace {

using Element = FiniteField::Element;

struct CurveOver {
  const FiniteField& field;
  std::array<Element, 5> a;  // a1, a2, a3, a4, a6
};

FiniteField base_field(const EllipticCurve& e) {
  const auto [p, k] = prime_power(e.q);
  return FiniteField(p, k);
}

std::array<Element, 5> coefficients_in(const EllipticCurve& e, const FiniteField& base, const FiniteField& big) {
  std::array<Element, 5> out{};
  const Element root = big.embed_generator(base);
  for (std::size_t i = 0; i < 5; ++i) {
    Element c;
    if (base.degree() == 1) {
      c = base.from_int(e.a[i]);
    } else {
      if (e.a[i] < 0 || static_cast<std::uint64_t>(e.a[i]) >= e.q) {
        throw DomainError("curve coefficient " + std::to_string(e.a[i]) + " is not an element code of F_q");
      }
      c = static_cast<Element>(e.a[i]);
    }
    out[i] = c == 0 ? 0 : big.pow(root, base.log(c));
  }
  return out;
}

Element discriminant(const FiniteField& f, const std::array<Element, 5>& a) {
  const auto k = [&](long n) { return f.from_int(n); };
  const auto m = [&](Element x, Element y) { return f.mul(x, y); };
  const auto s = [&](Element x, Element y) { return f.add(x, y); };
  const Element a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const Element b2 = s(m(a1, a1), m(k(4), a2));
  const Element b4 = s(m(k(2), a4), m(a1, a3));
  const Element b6 = s(m(a3, a3), m(k(4), a6));
  Element b8 = s(m(m(a1, a1), a6), m(k(4), m(a2, a6)));
  b8 = f.sub(b8, m(a1, m(a3, a4)));
  b8 = s(b8, m(a2, m(a3, a3)));
  b8 = f.sub(b8, m(a4, a4));
  Element d = f.neg(m(m(b2, b2), b8));
  d = f.sub(d, m(k(8), m(b4, m(b4, b4))));
  d = f.sub(d, m(k(27), m(b6, b6)));
  d = s(d, m(k(9), m(b2, m(b4, b6))));
  return d;
}

}  // namespace

std::uint64_t count_points(const EllipticCurve& e, unsigned n) {
  const FiniteField base = base_field(e);
  if (discriminant(base, coefficients_in(e, base, base)) == 0) throw SingularCurve("discriminant vanishes");
  if (n == 0) throw DomainError("extension degree must be positive");
  const FiniteField f(base.characteristic(), base.degree() * n);
  const auto [a1, a2, a3, a4, a6] = coefficients_in(e, base, f);
  std::uint64_t count = 1;  // the point at infinity
  for (Element x = 0; x < f.size(); ++x) {
    // y^2 + b y = c
    const Element b = f.add(f.mul(a1, x), a3);
    const Element x2 = f.mul(x, x);
    const Element c = f.add(f.add(f.mul(x2, x), f.mul(a2, x2)), f.add(f.mul(a4, x), a6));
    if (f.characteristic() == 2) {
      if (b == 0) {
        count += 1;  // squaring is bijective
      } else {
        // y = b z: z^2 + z = c / b^2 is solvable iff the trace vanishes
        count += f.trace(f.mul(c, f.inv(f.mul(b, b)))) == 0 ? 2 : 0;
      }
    } else {
      const Element disc = f.add(f.mul(b, b), f.mul(f.from_int(4), c));
      count += disc == 0 ? 1 : (f.is_square(disc) ? 2 : 0);
    }
  }
  return count;
}

WeilDatum elliptic_point_count_oracle(const EllipticCurve& e) {
  const Integer q(static_cast<unsigned long>(e.q));
  const Integer a = q + 1 - Integer(static_cast<unsigned long>(count_points(e, 1)));
  if (a * a > 4 * q) throw HasseViolation("trace " + a.get_str() + " violates |a| <= 2 sqrt(q)");
  return {q, 1, Polynomial{Rational(q), Rational(-a), 1}};
}

CountReport verify_counts(const MotiveDatum& m, const EllipticCurve& e, unsigned n_max) {
  CountReport r;
  if (n_max == 0) return r;
  const Vector sums = log_power_sums(variety_zeta(m), n_max + 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    if (!is_integer(sums[n])) throw CountMismatch("predicted N_" + std::to_string(n) + " is not an integer");
    r.predicted.push_back(sums[n].get_num());
    r.counted.emplace_back(static_cast<unsigned long>(count_points(e, n)));
    if (r.predicted.back() != r.counted.back()) {
      throw CountMismatch("N_" + std::to_string(n) + ": zeta predicts " + r.predicted.back().get_str() +
                          ", counting gives " + r.counted.back().get_str());
    }
  }
  return r;
}

namespace {

Vector negated_field_trace(const Algebra& a) {
  Vector out;
  for (std::size_t i = 0; i < a.dim(); ++i) out.push_back(-a.regular_trace(a.basis(i)));
  return out;
}

}  // namespace

ObjectDatum object_datum_of_h1(const WeilDatum& w) {
  validate_weil(w);
  if (w.g == 0 || !is_irreducible(w.p1)) throw NotIrreducible("p1 = " + w.p1.to_string() + " is not irreducible");
  const Algebra a = polynomial_quotient(w.p1);
  return ObjectDatum(a, negated_field_trace(a));
}

RealizedMotive elliptic_motive_object(const WeilDatum& w) {
  if (w.g != 1) throw DomainError("elliptic motive needs g = 1");
  const ObjectDatum h1 = object_datum_of_h1(w);
  const Algebra q_alg = polynomial_quotient(Polynomial{0, 1});
  const Algebra a = direct_product(direct_product(q_alg, h1.algebra()), q_alg);
  Vector trace{1};
  trace.insert(trace.end(), h1.trace().begin(), h1.trace().end());
  trace.push_back(1);
  return {ObjectDatum(a, trace), Vector{1, 0, 1, Rational(w.q)}};
}

}  // namespace rigid
