#include "rigid/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "rigid/errors.hpp"

namespace rigid {

Polynomial::Polynomial(Vector coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial(Vector{c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) throw DomainError("negative monomial degree");
  Vector v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const Vector& roots) {
  Polynomial p = constant(1);
  for (const auto& r : roots) p *= Polynomial{-r, 1};
  return p;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  Vector out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  normalize();
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  Vector rem = coeffs_;
  const int dd = divisor.degree();
  const Rational lead_inv = 1 / divisor.leading();
  Vector quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
  for (int i = degree(); i >= dd; --i) {
    const Rational c = rem[static_cast<std::size_t>(i)] * lead_inv;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vector out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * (1 / leading());
}

Polynomial Polynomial::scale_variable(const Rational& c) const {
  Vector out = coeffs_;
  Rational power = 1;
  for (auto& x : out) {
    x *= power;
    power *= c;
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::reversed(int n) const {
  if (is_zero()) return {};
  if (n < degree()) throw DomainError("reversal length below degree");
  Vector out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    Vector out(static_cast<std::size_t>(k), Rational(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(out));
  }
  const auto drop = static_cast<std::size_t>(-k);
  for (std::size_t i = 0; i < drop && i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) throw DomainError("negative shift would drop nonzero coefficients");
  }
  if (drop >= coeffs_.size()) return {};
  return Polynomial(Vector(coeffs_.begin() + static_cast<long>(drop), coeffs_.end()));
}

Polynomial Polynomial::truncated(int n) const {
  if (n <= 0) return {};
  if (n >= static_cast<int>(coeffs_.size())) return *this;
  return Polynomial(Vector(coeffs_.begin(), coeffs_.begin() + n));
}

int Polynomial::root_multiplicity(const Rational& r) const {
  if (is_zero()) return -1;
  const Polynomial lin{-r, 1};
  int m = 0;
  Polynomial p = *this;
  while (true) {
    auto [q, rem] = p.divmod(lin);
    if (!rem.is_zero()) return m;
    ++m;
    p = std::move(q);
  }
}

std::pair<Rational, std::vector<Integer>> Polynomial::primitive_integer() const {
  if (is_zero()) return {Rational(0), {}};
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  for (auto& v : ints) v /= content;
  Rational scale(content, den_lcm);
  scale.canonicalize();
  return {scale, ints};
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) os << rigid::to_string(mag);
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(1), s1;
  Polynomial t0, t1 = Polynomial::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {Polynomial(), Polynomial(), Polynomial()};
  const Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Polynomial inverse_mod(const Polynomial& a, const Polynomial& m) {
  auto eg = extended_gcd(a, m);
  if (eg.g != Polynomial::constant(1)) throw DomainError("polynomial not invertible modulo the given modulus");
  return eg.s % m;
}

bool is_squarefree(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace rigid
