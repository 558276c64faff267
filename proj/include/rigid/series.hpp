#ifndef RIGID_SERIES_HPP_
#define RIGID_SERIES_HPP_

#include <string>

#include "rigid/polynomial.hpp"

namespace rigid {

// First `precision()` Taylor coefficients of a formal power series.
struct PowerSeriesPrefix {
  Vector coefficients;
  std::size_t precision() const { return coefficients.size(); }
  friend bool operator==(const PowerSeriesPrefix&, const PowerSeriesPrefix&) = default;
};

// num/den in lowest terms. When den(0) != 0 the pair is scaled so that
// den(0) == 1 (the normalization every zeta function satisfies); otherwise
// den is made monic.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial::constant(1)), den_(Polynomial::constant(1)) {}
  RationalFunction(Polynomial num, Polynomial den);
  explicit RationalFunction(Polynomial num) : RationalFunction(std::move(num), Polynomial::constant(1)) {}

  static RationalFunction one() { return {}; }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_one() const { return num_ == Polynomial::constant(1) && den_ == Polynomial::constant(1); }

  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(int n) const;
  RationalFunction inverse() const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(char var = 't') const;

 private:
  Polynomial num_;
  Polynomial den_;
};

// t^D * p(1/t) scaled to constant term 1, D = deg p: the "inverse" form
// prod(1 - a t) of a polynomial prod(t - a). Throws DomainError on zero p.
Polynomial inverse_form(const Polynomial& p);

PowerSeriesPrefix series_expand(const RationalFunction& f, std::size_t n);

// Pade-type reconstruction with deg num <= num_bound and deg den <= den_bound.
RationalFunction rational_reconstruct(const PowerSeriesPrefix& s, std::size_t num_bound, std::size_t den_bound);

// a[1..n] with f = exp(sum a_k t^k / k); a[0] is left at 0. Requires f(0) = 1.
Vector log_power_sums(const RationalFunction& f, std::size_t n);
// Inverse of log_power_sums on prefixes: coefficients of exp(sum a_k t^k/k).
PowerSeriesPrefix exp_of_power_sums(const Vector& a);

// Virtual rank of f = prod (1 - a t)^(-m_a): (sum of positive m, sum of |negative m|),
// i.e. (deg den, deg num) for f(0) = 1.
struct VirtualRank {
  std::size_t positive = 0;
  std::size_t negative = 0;
};
VirtualRank virtual_rank(const RationalFunction& f);

// Lambda-ring style operations on functions with constant term 1. All of them
// go through power sums and rational reconstruction with exact degree bounds
// derived from the virtual ranks; precision is doubled on failure, at most
// four retries.
RationalFunction hadamard(const RationalFunction& f, const RationalFunction& g);
RationalFunction lambda_op(const RationalFunction& f, unsigned k);
RationalFunction sigma_op(const RationalFunction& f, unsigned k);
// Power sums 1..count (index 0 unused) of lambda^k f and sigma^k f, by
// Newton's identities from the power sums of f.
Vector lambda_power_sums(const RationalFunction& f, unsigned k, std::size_t count);
Vector sigma_power_sums(const RationalFunction& f, unsigned k, std::size_t count);
// Adams operation: power sums a_n -> a_{k n}.
RationalFunction adams_op(const RationalFunction& f, unsigned k);

// Order of vanishing at t = 1 (negative for a pole).
int ord_at_one(const RationalFunction& f);

}  // namespace rigid

#endif  // RIGID_SERIES_HPP_
