#include "rigid/object.hpp"

#include "rigid/errors.hpp"

namespace rigid {

ObjectDatum::ObjectDatum(Algebra algebra, Vector trace) : algebra_(std::move(algebra)), trace_(std::move(trace)) {
  const std::size_t n = algebra_.dim();
  if (trace_.size() != n) throw InvalidObject("trace has " + std::to_string(trace_.size()) + " values, algebra dimension " + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (trace_of(algebra_.multiply(algebra_.basis(i), algebra_.basis(j))) !=
          trace_of(algebra_.multiply(algebra_.basis(j), algebra_.basis(i)))) {
        throw InvalidObject("trace is not symmetric on basis pair (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }
  if (!check_semisimple(algebra_)) throw NotSemisimple("endomorphism algebra is not semisimple");
}

Rational ObjectDatum::trace_of(const Vector& x) const {
  algebra_.check_element(x);
  Rational t = 0;
  for (std::size_t i = 0; i < x.size(); ++i) t += x[i] * trace_[i];
  return t;
}

bool MultiplicityVector::all_scalar() const {
  for (const auto& s : scalar) {
    if (!s) return false;
  }
  return true;
}

namespace {

// lambda with z = lambda e, if any.
std::optional<Rational> scalar_multiple(const Vector& z, const Vector& e) {
  std::optional<Rational> lambda;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] != 0) {
      lambda = z[k] / e[k];
      break;
    }
  }
  if (!lambda) return std::nullopt;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (z[k] != *lambda * e[k]) return std::nullopt;
  }
  return lambda;
}

}  // namespace

MultiplicityVector solve_multiplicity(const ObjectDatum& obj, const Decomposition& dec) {
  const Algebra& a = obj.algebra();
  const std::size_t n = a.dim();
  std::vector<Vector> center;
  for (const auto& f : dec.factors) center.insert(center.end(), f.center_basis.begin(), f.center_basis.end());

  Matrix system(n, center.size());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t z = 0; z < center.size(); ++z) system(j, z) = reduced_trace(dec, a.multiply(center[z], a.basis(j)));
  }
  const auto coords = system.solve(obj.trace());
  if (!coords) throw Inconsistent("no central element represents the trace functional");

  MultiplicityVector mv;
  mv.element = zero_vector(n);
  for (std::size_t z = 0; z < center.size(); ++z) {
    for (std::size_t k = 0; k < n; ++k) mv.element[k] += (*coords)[z] * center[z][k];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (reduced_trace(dec, a.multiply(mv.element, a.basis(j))) != obj.trace()[j]) {
      throw Inconsistent("solution fails tr(f) = Trd(mu f) on basis element " + std::to_string(j));
    }
  }
  if (!a.is_invertible(mv.element)) throw NotInvertible("multiplicity element is not invertible");
  for (const auto& f : dec.factors) {
    const Vector local = a.multiply(f.idempotent, mv.element);
    mv.mu.push_back(center_coordinates(f, local));
    mv.scalar.push_back(scalar_multiple(local, f.idempotent));
  }
  return mv;
}

MultiplicityVector multiplicity_from_idempotents(const ObjectDatum& obj, const Decomposition& dec) {
  const MultiplicityVector solved = solve_multiplicity(obj, dec);
  MultiplicityVector mv;
  mv.element = zero_vector(obj.algebra().dim());
  for (std::size_t i = 0; i < dec.factors.size(); ++i) {
    if (!solved.scalar[i]) throw NotScalar("multiplicity of factor " + std::to_string(i) + " is not a rational scalar");
    const auto& f = dec.factors[i];
    const Rational mu = obj.trace_of(f.idempotent) / (f.delta * f.d);
    for (std::size_t k = 0; k < mv.element.size(); ++k) mv.element[k] += mu * f.idempotent[k];
    mv.mu.push_back(center_coordinates(f, [&] {
      Vector v = f.idempotent;
      for (auto& x : v) x *= mu;
      return v;
    }()));
    mv.scalar.emplace_back(mu);
  }
  return mv;
}

AnalyzedObject analyze(const ObjectDatum& obj, std::uint64_t seed) {
  Decomposition dec = decompose(obj.algebra(), seed);
  MultiplicityVector mv = solve_multiplicity(obj, dec);
  return {obj, std::move(dec), std::move(mv)};
}

IntegralityReport check_integral_type(const MultiplicityVector& mv) {
  IntegralityReport r;
  for (const auto& s : mv.scalar) {
    const bool ok = s && is_integer(*s);
    r.per_factor.push_back(ok);
    r.integral = r.integral && ok;
  }
  return r;
}

Rational euler_characteristic(const ObjectDatum& obj) { return obj.trace_of(obj.algebra().unit()); }

ObjectDatum dual_trace(const ObjectDatum& obj, const Matrix& anti) {
  const Algebra& a = obj.algebra();
  const std::size_t n = a.dim();
  if (anti.rows() != n || anti.cols() != n) throw NotAntiAutomorphism("map has the wrong shape");
  if (anti.determinant() == 0) throw NotAntiAutomorphism("map is not bijective");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector lhs = anti * a.multiply(a.basis(i), a.basis(j));
      const Vector rhs = a.multiply(anti.column(j), anti.column(i));
      if (lhs != rhs) {
        throw NotAntiAutomorphism("phi(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != phi(e_" +
                                  std::to_string(j) + ") phi(e_" + std::to_string(i) + ")");
      }
    }
  }
  Vector trace(n);
  for (std::size_t j = 0; j < n; ++j) trace[j] = obj.trace_of(anti.column(j));
  return ObjectDatum(a, std::move(trace));
}

TensorRelationReport tensor_relation_check(const TensorRelationDatum& datum) {
  for (const FactorInvariants* f : {&datum.left, &datum.right}) {
    if (f->delta == 0 || f->d == 0) throw DomainError("delta and d must be positive");
  }
  TensorRelationReport r;
  r.lhs = datum.left.mu * datum.right.mu;
  r.rhs = 0;
  bool all_valid = true;
  bool any_pos = false, any_neg = false;
  for (const auto& k : datum.product) {
    if (k.delta == 0 || k.d == 0) throw DomainError("delta and d must be positive");
    const Rational m = Rational(k.delta * k.d) / (datum.left.d * datum.right.d);
    r.m.push_back(m);
    const bool valid = is_integer(m) && m >= 0;
    r.m_valid.push_back(valid);
    all_valid = all_valid && valid;
    r.rhs += m * k.mu;
    any_pos = any_pos || k.mu > 0;
    any_neg = any_neg || k.mu < 0;
  }
  r.sum_matches = r.lhs == r.rhs;
  r.same_sign = !(any_pos && any_neg);
  if (r.same_sign) {
    for (const auto& k : datum.product) r.bound_holds = r.bound_holds && abs(k.mu) <= abs(r.lhs);
  }
  r.passed = all_valid && r.sum_matches && r.bound_holds;
  return r;
}

NilpotenceBounds nilpotence_bounds(const std::vector<Integer>& mu_abs, const std::vector<Integer>& e_divisors,
                                   const Integer& chi_plus_abs, const Integer& chi_minus_abs) {
  if (mu_abs.size() != e_divisors.size()) throw DomainError("one divisor per multiplicity expected");
  Integer product = 1;
  for (std::size_t i = 0; i < mu_abs.size(); ++i) {
    if (mu_abs[i] <= 0 || e_divisors[i] <= 0) throw DomainError("multiplicities and divisors must be positive");
    if (mu_abs[i] % e_divisors[i] != 0) {
      throw DivisibilityViolation(e_divisors[i].get_str() + " does not divide " + mu_abs[i].get_str());
    }
    product *= mu_abs[i] / e_divisors[i] + 1;
  }
  const Integer chi = abs(chi_plus_abs) + abs(chi_minus_abs);
  return {product - 1, chi * chi};
}

}  // namespace rigid
