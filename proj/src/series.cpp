#include "rigid/series.hpp"

#include <functional>
#include <sstream>

#include "rigid/errors.hpp"
#include "rigid/matrix.hpp"

namespace rigid {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = Polynomial();
    den_ = Polynomial::constant(1);
    return;
  }
  const Polynomial g = gcd(num, den);
  num = num / g;
  den = den / g;
  const Rational scale = den.constant_term() != 0 ? den.constant_term() : den.leading();
  num_ = num * (1 / scale);
  den_ = den * (1 / scale);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return {num_ * o.num_, den_ * o.den_};
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.num_.is_zero()) throw DomainError("division by the zero rational function");
  return {num_ * o.den_, den_ * o.num_};
}

RationalFunction RationalFunction::inverse() const { return RationalFunction(den_, num_); }

RationalFunction RationalFunction::pow(int n) const {
  if (n >= 0) return {num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n))};
  return inverse().pow(-n);
}

std::string RationalFunction::to_string(char var) const {
  std::ostringstream os;
  os << "(" << num_.to_string(var) << ")/(" << den_.to_string(var) << ")";
  return os.str();
}

Polynomial inverse_form(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("inverse form of the zero polynomial");
  const Polynomial r = p.reversed();
  return r * (1 / r.constant_term());
}

PowerSeriesPrefix series_expand(const RationalFunction& f, std::size_t n) {
  const Rational d0 = f.den().constant_term();
  if (d0 == 0) throw PoleAtZero("rational function has a pole at t = 0: " + f.to_string());
  PowerSeriesPrefix out;
  out.coefficients.assign(n, Rational(0));
  const Rational inv = 1 / d0;
  for (std::size_t k = 0; k < n; ++k) {
    Rational c = f.num().coeff(static_cast<int>(k));
    for (int j = 1; j <= f.den().degree() && static_cast<std::size_t>(j) <= k; ++j) {
      c -= f.den().coeff(j) * out.coefficients[k - static_cast<std::size_t>(j)];
    }
    out.coefficients[k] = c * inv;
  }
  return out;
}

RationalFunction rational_reconstruct(const PowerSeriesPrefix& s, std::size_t num_bound, std::size_t den_bound) {
  const std::size_t n = s.precision();
  if (n < num_bound + den_bound + 1) throw DomainError("series prefix too short for the requested degree bounds");
  const auto coeff = [&](long i) -> Rational { return i < 0 ? Rational(0) : s.coefficients[static_cast<std::size_t>(i)]; };
  Vector q(den_bound + 1, Rational(0));
  q[0] = 1;
  if (den_bound > 0) {
    const std::size_t equations = n - num_bound - 1;
    Matrix a(equations, den_bound);
    Vector rhs(equations);
    for (std::size_t e = 0; e < equations; ++e) {
      const long k = static_cast<long>(num_bound + 1 + e);
      for (std::size_t j = 1; j <= den_bound; ++j) a(e, j - 1) = coeff(k - static_cast<long>(j));
      rhs[e] = -coeff(k);
    }
    auto sol = a.solve(rhs);
    if (!sol) throw NoReconstruction("no denominator of degree <= " + std::to_string(den_bound) + " fits the series");
    for (std::size_t j = 1; j <= den_bound; ++j) q[j] = (*sol)[j - 1];
  }
  Polynomial den(q);
  Polynomial series(s.coefficients);
  Polynomial num = (den * series).truncated(static_cast<int>(num_bound) + 1);
  RationalFunction f(num, den);
  if (series_expand(f, n) != s) throw NoReconstruction("reconstructed function does not reproduce the series");
  return f;
}

Vector log_power_sums(const RationalFunction& f, std::size_t n) {
  const PowerSeriesPrefix c = series_expand(f, n + 1);
  if (c.coefficients[0] != 1) throw DomainError("power sums need constant term 1, got " + f.to_string());
  Vector a(n + 1, Rational(0));
  for (std::size_t m = 1; m <= n; ++m) {
    Rational v = c.coefficients[m] * static_cast<unsigned long>(m);
    for (std::size_t k = 1; k < m; ++k) v -= a[k] * c.coefficients[m - k];
    a[m] = v;
  }
  return a;
}

PowerSeriesPrefix exp_of_power_sums(const Vector& a) {
  PowerSeriesPrefix out;
  if (a.empty()) return out;
  out.coefficients.assign(a.size(), Rational(0));
  out.coefficients[0] = 1;
  for (std::size_t m = 1; m < a.size(); ++m) {
    Rational v = 0;
    for (std::size_t k = 1; k <= m; ++k) v += a[k] * out.coefficients[m - k];
    out.coefficients[m] = v / static_cast<unsigned long>(m);
  }
  return out;
}

VirtualRank virtual_rank(const RationalFunction& f) {
  if (f.num().constant_term() != 1 || f.den().constant_term() != 1) {
    throw DomainError("virtual rank needs f(0) = 1, got " + f.to_string());
  }
  return {static_cast<std::size_t>(f.den().degree()), static_cast<std::size_t>(f.num().degree())};
}

namespace {

constexpr std::size_t kGuard = 4;

// Builds the function whose n-th power sum is `power_sum(n)`, given
// bounds on numerator and denominator degree.
RationalFunction from_power_sums(const std::function<Vector(std::size_t)>& power_sums, std::size_t num_bound,
                                 std::size_t den_bound) {
  std::size_t nb = num_bound;
  std::size_t db = den_bound;
  for (int attempt = 0;; ++attempt) {
    // a few coefficients beyond the minimum make the final verification
    // in rational_reconstruct meaningful even when both bounds are 0
    const std::size_t precision = nb + db + 1 + kGuard;
    const Vector a = power_sums(precision - 1);
    try {
      return rational_reconstruct(exp_of_power_sums(a), nb, db);
    } catch (const NoReconstruction&) {
      if (attempt == 4) throw;
    }
    nb = 2 * nb + 1;
    db = 2 * db + 1;
  }
}

std::size_t complete_count(std::size_t rank, std::size_t j) {
  if (rank == 0) return j == 0 ? 1 : 0;
  return binomial(static_cast<long>(rank + j - 1), static_cast<long>(j)).get_ui();
}

std::size_t exterior_count(std::size_t rank, std::size_t j) {
  return binomial(static_cast<long>(rank), static_cast<long>(j)).get_ui();
}

// Power sums of the k-th elementary (exterior = true) or complete symmetric
// function of the virtual eigenvalue multiset, for n = 1..count.
Vector symmetric_power_sums(const RationalFunction& f, unsigned k, std::size_t count, bool exterior) {
  const Vector a = log_power_sums(f, count * k);
  Vector out(count + 1, Rational(0));
  for (std::size_t n = 1; n <= count; ++n) {
    Vector e(k + 1, Rational(0));
    e[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
      Rational v = 0;
      for (unsigned i = 1; i <= m; ++i) {
        const Rational& p = a[i * n];
        if (exterior && (i % 2 == 0)) {
          v -= e[m - i] * p;
        } else {
          v += e[m - i] * p;
        }
      }
      e[m] = v / m;
    }
    out[n] = e[k];
  }
  return out;
}

}  // namespace

Vector lambda_power_sums(const RationalFunction& f, unsigned k, std::size_t count) {
  return symmetric_power_sums(f, k, count, true);
}

Vector sigma_power_sums(const RationalFunction& f, unsigned k, std::size_t count) {
  return symmetric_power_sums(f, k, count, false);
}

RationalFunction hadamard(const RationalFunction& f, const RationalFunction& g) {
  const VirtualRank rf = virtual_rank(f);
  const VirtualRank rg = virtual_rank(g);
  const std::size_t den_bound = rf.positive * rg.positive + rf.negative * rg.negative;
  const std::size_t num_bound = rf.positive * rg.negative + rf.negative * rg.positive;
  return from_power_sums(
      [&](std::size_t n) {
        const Vector a = log_power_sums(f, n);
        const Vector b = log_power_sums(g, n);
        Vector c(n + 1, Rational(0));
        for (std::size_t i = 1; i <= n; ++i) c[i] = a[i] * b[i];
        return c;
      },
      num_bound, den_bound);
}

RationalFunction lambda_op(const RationalFunction& f, unsigned k) {
  const VirtualRank r = virtual_rank(f);
  if (k == 0) return RationalFunction(Polynomial::constant(1), Polynomial{1, -1});
  std::size_t num_bound = 0, den_bound = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const std::size_t terms = exterior_count(r.positive, k - j) * complete_count(r.negative, j);
    (j % 2 == 0 ? den_bound : num_bound) += terms;
  }
  return from_power_sums([&](std::size_t n) { return symmetric_power_sums(f, k, n, true); }, num_bound, den_bound);
}

RationalFunction sigma_op(const RationalFunction& f, unsigned k) {
  const VirtualRank r = virtual_rank(f);
  if (k == 0) return RationalFunction(Polynomial::constant(1), Polynomial{1, -1});
  std::size_t num_bound = 0, den_bound = 0;
  for (unsigned j = 0; j <= k; ++j) {
    const std::size_t terms = complete_count(r.positive, k - j) * exterior_count(r.negative, j);
    (j % 2 == 0 ? den_bound : num_bound) += terms;
  }
  return from_power_sums([&](std::size_t n) { return symmetric_power_sums(f, k, n, false); }, num_bound, den_bound);
}

RationalFunction adams_op(const RationalFunction& f, unsigned k) {
  if (k == 0) throw DomainError("Adams operation of order 0");
  const VirtualRank r = virtual_rank(f);
  return from_power_sums(
      [&](std::size_t n) {
        const Vector a = log_power_sums(f, n * k);
        Vector c(n + 1, Rational(0));
        for (std::size_t i = 1; i <= n; ++i) c[i] = a[i * k];
        return c;
      },
      r.negative, r.positive);
}

int ord_at_one(const RationalFunction& f) {
  if (f.num().is_zero()) throw DomainError("order at 1 of the zero function");
  return f.num().root_multiplicity(1) - f.den().root_multiplicity(1);
}

}  // namespace rigid
