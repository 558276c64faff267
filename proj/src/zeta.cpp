#include "rigid/zeta.hpp"

#include "rigid/errors.hpp"

namespace rigid {

namespace {

Rational rational_pow(const Rational& base, const Integer& exponent) {
  Rational result = 1;
  Rational b = exponent < 0 ? Rational(1 / base) : base;
  Integer e = abs(exponent);
  while (e > 0) {
    if (e.get_ui() & 1U) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

}  // namespace

ZetaResult zeta(const AnalyzedObject& obj, const Vector& f) {
  const Algebra& a = obj.object.algebra();
  a.check_element(f);
  const auto& mv = obj.multiplicity;
  if (!check_integral_type(mv).integral) throw NotIntegralType("zeta needs every multiplicity to be an integer");

  ZetaResult out;
  out.chi = euler_characteristic(obj.object);
  const bool invertible = a.is_invertible(f);
  Rational det = 1;
  Polynomial num = Polynomial::constant(1), den = Polynomial::constant(1);
  for (std::size_t i = 0; i < obj.decomposition.factors.size(); ++i) {
    const Integer mu = mv.scalar[i]->get_num();
    const Polynomial nrd = reduced_charpoly(obj.decomposition, i, f);
    out.per_factor.push_back({nrd, -mu});
    const auto power = static_cast<unsigned>(Integer(abs(mu)).get_ui());
    (mu < 0 ? num : den) *= nrd.pow(power);
    if (invertible) {
      const auto& factor = obj.decomposition.factors[i];
      const int degree = static_cast<int>(factor.delta * factor.d);
      const Rational top = nrd.coeff(degree);
      det *= rational_pow(degree % 2 == 0 ? top : Rational(-top), mu);
    }
  }
  out.zeta = RationalFunction(num, den);
  if (invertible) out.det = det;
  return out;
}

bool zeta_series_check(const AnalyzedObject& obj, const Vector& f, std::size_t n) {
  if (n == 0) return true;
  const Algebra& a = obj.object.algebra();
  Vector sums(n, Rational(0));
  Vector power = a.unit();
  for (std::size_t k = 1; k < n; ++k) {
    power = a.multiply(power, f);
    sums[k] = obj.object.trace_of(power);
  }
  return exp_of_power_sums(sums) == series_expand(zeta(obj, f).zeta, n);
}

RationalFunction substitute_reciprocal(const RationalFunction& z) {
  // N(1/t)/D(1/t) = t^(b - a) N^rev / D^rev with a = deg N, b = deg D.
  const int a = z.num().degree(), b = z.den().degree();
  Polynomial num = z.num().reversed(), den = z.den().reversed();
  if (b >= a) {
    num = num.shifted(b - a);
  } else {
    den = den.shifted(a - b);
  }
  return RationalFunction(num, den);
}

FunctionalEquationReport functional_equation_check(const AnalyzedObject& obj, const Vector& f) {
  const Algebra& a = obj.object.algebra();
  const auto inv = a.inverse(f);
  if (!inv) throw NotInvertible("endomorphism is not invertible");
  const ZetaResult direct = zeta(obj, f);
  const ZetaResult inverse = zeta(obj, *inv);
  if (!is_integer(direct.chi)) throw NotIntegralType("Euler characteristic is not an integer");
  const long chi = direct.chi.get_num().get_si();

  FunctionalEquationReport r;
  r.chi = direct.chi;
  r.det = *direct.det;
  r.lhs = substitute_reciprocal(inverse.zeta);
  // (-t)^chi det Z(f, t)
  Polynomial num = direct.zeta.num() * (chi % 2 == 0 ? r.det : Rational(-r.det));
  Polynomial den = direct.zeta.den();
  if (chi >= 0) {
    num = num.shifted(static_cast<int>(chi));
  } else {
    den = den.shifted(static_cast<int>(-chi));
  }
  r.rhs = RationalFunction(num, den);
  r.holds = r.lhs.num() * r.rhs.den() == r.rhs.num() * r.lhs.den();
  return r;
}

RationalFunction matrix_zeta(const Matrix& m) {
  return RationalFunction(Polynomial::constant(1), m.inverse_charpoly());
}

bool zeta_additivity_check(const AnalyzedObject& a, const Vector& fa, const AnalyzedObject& b, const Vector& fb) {
  Vector trace = a.object.trace();
  trace.insert(trace.end(), b.object.trace().begin(), b.object.trace().end());
  Vector f = fa;
  f.insert(f.end(), fb.begin(), fb.end());
  const AnalyzedObject sum = analyze(ObjectDatum(direct_product(a.object.algebra(), b.object.algebra()), trace));
  return zeta(sum, f).zeta == zeta(a, fa).zeta * zeta(b, fb).zeta;
}

bool zeta_tensor_check(const Matrix& a, const Matrix& b) {
  return matrix_zeta(kronecker(a, b)) == hadamard(matrix_zeta(a), matrix_zeta(b));
}

}  // namespace rigid
