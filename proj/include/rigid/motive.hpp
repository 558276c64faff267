#ifndef RIGID_MOTIVE_HPP_
#define RIGID_MOTIVE_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "rigid/object.hpp"
#include "rigid/series.hpp"

namespace rigid {

// Frobenius on h_1 of a g-dimensional abelian variety over F_q: p1 is monic of
// degree 2g with integer coefficients and its roots pair to q.
struct WeilDatum {
  Integer q;
  unsigned g = 0;
  Polynomial p1;
};

// Throws NotWeil.
void validate_weil(const WeilDatum& w);

struct MotiveComponent {
  Polynomial p;  // det(t - F | h_i)
  long chi = 0;  // (-1)^i binomial(2g, i)
  long mu = 0;   // (-1)^i
};

struct MotiveDatum {
  Integer q;
  unsigned g = 0;
  std::vector<MotiveComponent> components;  // i = 0 .. 2g
};

// h_i from exterior powers of the h_1 Frobenius. Throws NotWeil.
MotiveDatum from_weil(const WeilDatum& w);

// prod_i (inverse form of p_i)^((-1)^(i+1))
RationalFunction variety_zeta(const MotiveDatum& m);

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over F_q. For prime q the
// coefficients are integers reduced mod q; for q = p^k they are element codes
// of FiniteField(p, k), in [0, q).
struct EllipticCurve {
  std::uint64_t q = 0;
  std::array<long, 5> a{};  // a1, a2, a3, a4, a6
};

// #E(F_{q^n}), projective points, by enumerating x and counting y. Throws
// SingularCurve, UnsupportedField (q^n > 2^16) or DomainError on bad codes.
std::uint64_t count_points(const EllipticCurve& e, unsigned n);

// a = q + 1 - #E(F_q), p1 = t^2 - a t + q. Throws HasseViolation if a^2 > 4q.
WeilDatum elliptic_point_count_oracle(const EllipticCurve& e);

struct CountReport {
  std::vector<Integer> predicted;  // N_1 .. N_nmax from variety_zeta
  std::vector<Integer> counted;
};
// Throws CountMismatch at the first disagreement.
CountReport verify_counts(const MotiveDatum& m, const EllipticCurve& e, unsigned n_max);

// Q[t]/(p1) with trace -Trd, so the multiplicity is -1. Throws
// NotIrreducible when p1 is reducible.
ObjectDatum object_datum_of_h1(const WeilDatum& w);

// h(E) = h_0 + h_1 + h_2 for g = 1 as Q x Q[t]/(p1) x Q, with Frobenius
// (1, t, q).
struct RealizedMotive {
  ObjectDatum object;
  Vector frobenius;
};
RealizedMotive elliptic_motive_object(const WeilDatum& w);

}  // namespace rigid

#endif  // RIGID_MOTIVE_HPP_
