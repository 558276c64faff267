#include "rigid/algebra.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "rigid/errors.hpp"
#include "rigid/factor.hpp"

namespace rigid {

Algebra::Algebra(std::size_t dim, Vector constants, Vector unit)
    : dim_(dim), c_(std::move(constants)), unit_(std::move(unit)) {
  if (dim_ == 0) throw InvalidAlgebra("algebra of dimension 0");
  if (c_.size() != dim_ * dim_ * dim_) throw InvalidAlgebra("expected n^3 structure constants");
  if (unit_.size() != dim_) throw InvalidAlgebra("unit has the wrong length");
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vector ei = basis(i);
    if (multiply(unit_, ei) != ei || multiply(ei, unit_) != ei) {
      throw InvalidAlgebra("unit is not a two-sided identity on basis element " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const Vector ij = multiply(basis(i), basis(j));
      for (std::size_t k = 0; k < dim_; ++k) {
        const Vector jk = multiply(basis(j), basis(k));
        if (multiply(ij, basis(k)) != multiply(basis(i), jk)) {
          throw InvalidAlgebra("not associative on basis triple (" + std::to_string(i) + ", " + std::to_string(j) +
                               ", " + std::to_string(k) + ")");
        }
      }
    }
  }
}

void Algebra::check_element(const Vector& x) const {
  if (x.size() != dim_) {
    throw DomainError("element has " + std::to_string(x.size()) + " coordinates, algebra has dimension " +
                      std::to_string(dim_));
  }
}

Vector Algebra::multiply(const Vector& x, const Vector& y) const {
  check_element(x);
  check_element(y);
  Vector out(dim_, Rational(0));
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j] == 0) continue;
      const Rational xy = x[i] * y[j];
      const Rational* row = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (row[k] != 0) out[k] += xy * row[k];
      }
    }
  }
  return out;
}

Vector Algebra::power(const Vector& x, unsigned n) const {
  Vector result = unit_;
  Vector base = x;
  while (n > 0) {
    if (n & 1U) result = multiply(result, base);
    n >>= 1U;
    if (n > 0) base = multiply(base, base);
  }
  return result;
}

Vector Algebra::evaluate(const Polynomial& p, const Vector& x) const {
  Vector acc(dim_, Rational(0));
  for (int i = p.degree(); i >= 0; --i) {
    acc = multiply(acc, x);
    const Rational c = p.coeff(i);
    if (c != 0) {
      for (std::size_t k = 0; k < dim_; ++k) acc[k] += c * unit_[k];
    }
  }
  return acc;
}

Matrix Algebra::left_multiplication(const Vector& x) const {
  check_element(x);
  Matrix m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Rational& v = c(i, j, k);
        if (v != 0) m(k, j) += x[i] * v;
      }
    }
  }
  return m;
}

std::optional<Vector> Algebra::inverse(const Vector& x) const {
  const Matrix l = left_multiplication(x);
  if (l.determinant() == 0) return std::nullopt;
  // In a finite-dimensional algebra a left inverse is two-sided.
  return l.solve(unit_);
}

Polynomial Algebra::minimal_polynomial(const Vector& x) const { return minimal_polynomial(x, unit_); }

Polynomial Algebra::minimal_polynomial(const Vector& x, const Vector& e) const {
  check_element(x);
  std::vector<Vector> powers{e};
  Vector current = e;
  for (std::size_t k = 1; k <= dim_ + 1; ++k) {
    current = multiply(current, x);
    const Matrix basis = Matrix::from_columns(powers, dim_);
    if (auto sol = basis.solve(current)) {
      Vector coeffs(k + 1, Rational(0));
      for (std::size_t i = 0; i < k; ++i) coeffs[i] = -(*sol)[i];
      coeffs[k] = 1;
      return Polynomial(coeffs);
    }
    powers.push_back(current);
  }
  throw DomainError("minimal polynomial search exceeded the dimension");
}

std::vector<Vector> Algebra::center_basis() const {
  Matrix system(dim_ * dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    for (std::size_t k = 0; k < dim_; ++k) {
      for (std::size_t i = 0; i < dim_; ++i) system(j * dim_ + k, i) = c(i, j, k) - c(j, i, k);
    }
  }
  return system.nullspace();
}

bool Algebra::is_commutative() const { return center_basis().size() == dim_; }

bool check_semisimple(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(a.left_multiplication(a.basis(i)));
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      // Tr(L_{e_i} L_{e_j}) without forming the product.
      Rational t = 0;
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < n; ++s) t += left[i](r, s) * left[j](s, r);
      }
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return gram.determinant() != 0;
}

namespace {

Vector random_combination(const std::vector<Vector>& basis, std::size_t n, std::mt19937_64& rng, long bound) {
  Vector out(n, Rational(0));
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (const auto& b : basis) {
    const long r = static_cast<long>(rng() % span) - bound;
    if (r == 0) continue;
    for (std::size_t k = 0; k < n; ++k) out[k] += r * b[k];
  }
  return out;
}

}  // namespace

Decomposition decompose(const Algebra& a, std::uint64_t seed) {
  if (!check_semisimple(a)) throw NotSemisimple("the regular trace form is degenerate");
  const std::size_t n = a.dim();
  const std::vector<Vector> center = a.center_basis();
  const std::size_t m = center.size();

  std::mt19937_64 rng(seed);
  Vector primitive;
  Polynomial minpoly;
  long bound = 1;
  for (int attempt = 0;; ++attempt) {
    primitive = m == 1 ? a.unit() : random_combination(center, n, rng, bound);
    minpoly = a.minimal_polynomial(primitive);
    if (minpoly.degree() == static_cast<int>(m) && is_squarefree(minpoly)) break;
    if (attempt == 60) throw DomainError("no primitive element of the center found");
    if (bound < (1L << 20)) bound *= 2;
  }

  Decomposition dec{a, {}};
  for (const auto& [p, mult] : factor_over_Q(minpoly)) {
    (void)mult;
    const Polynomial cofactor = minpoly / p;
    const Polynomial lift = (cofactor * inverse_mod(cofactor, p)) % minpoly;
    SimpleFactor f;
    f.idempotent = a.evaluate(lift, primitive);
    std::vector<Vector> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(a.multiply(f.idempotent, a.basis(j)));
    f.factor_basis = Matrix::from_columns(images, n).column_space_basis();
    images.clear();
    for (const auto& z : center) images.push_back(a.multiply(f.idempotent, z));
    f.center_basis = Matrix::from_columns(images, n).column_space_basis();
    f.center_minpoly = p;
    f.delta = static_cast<unsigned>(f.center_basis.size());
    if (f.delta == 0 || f.dim() % f.delta != 0) throw NotPerfectSquare("factor dimension not divisible by its center");
    const Integer d = exact_sqrt(Integer(static_cast<unsigned long>(f.dim() / f.delta)));
    if (d < 0) {
      throw NotPerfectSquare("factor of dimension " + std::to_string(f.dim()) + " over a center of degree " +
                             std::to_string(f.delta) + " is not a square");
    }
    f.d = static_cast<unsigned>(d.get_ui());
    dec.factors.push_back(std::move(f));
  }
  std::sort(dec.factors.begin(), dec.factors.end(), [](const SimpleFactor& x, const SimpleFactor& y) {
    if (x.delta != y.delta) return x.delta < y.delta;
    if (x.d != y.d) return x.d < y.d;
    for (std::size_t k = 0; k < x.idempotent.size(); ++k) {
      if (x.idempotent[k] != y.idempotent[k]) return x.idempotent[k] > y.idempotent[k];
    }
    return false;
  });
  return dec;
}

Rational reduced_trace(const Decomposition& dec, const Vector& x) {
  Rational total = 0;
  for (const auto& f : dec.factors) {
    total += dec.algebra.regular_trace(dec.algebra.multiply(f.idempotent, x)) / f.d;
  }
  return total;
}

Polynomial reduced_charpoly(const Decomposition& dec, std::size_t factor, const Vector& x) {
  const SimpleFactor& f = dec.factors.at(factor);
  const Algebra& a = dec.algebra;
  // e x kills (1 - e)A, so the full characteristic polynomial is
  // t^(n - dim factor) times the one on the factor.
  const Polynomial full = a.left_multiplication(a.multiply(f.idempotent, x)).charpoly();
  const Polynomial local = full.shifted(-static_cast<int>(a.dim() - f.dim()));
  const Polynomial reduced = poly_nth_root(local, f.d);
  return reduced.reversed(static_cast<int>(f.delta * f.d));
}

Rational reduced_norm(const Decomposition& dec, std::size_t factor, const Vector& x) {
  const SimpleFactor& f = dec.factors.at(factor);
  const int degree = static_cast<int>(f.delta * f.d);
  const Rational top = reduced_charpoly(dec, factor, x).coeff(degree);
  return degree % 2 == 0 ? top : Rational(-top);
}

Vector center_coordinates(const SimpleFactor& f, const Vector& z) {
  auto sol = Matrix::from_columns(f.center_basis, z.size()).solve(z);
  if (!sol) throw DomainError("element is not in the center of the factor");
  return *sol;
}

Algebra group_algebra(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  Vector c(n * n * n, Rational(0));
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw InvalidAlgebra("group table is not square");
    for (std::size_t h = 0; h < n; ++h) {
      if (table[g][h] >= n) throw InvalidAlgebra("group table entry out of range");
      c[(g * n + h) * n + table[g][h]] = 1;
    }
  }
  return Algebra(n, std::move(c), unit_vector(n, 0));
}

Algebra cyclic_group_algebra(std::size_t n) { return abelian_group_algebra(n, 1); }

Algebra abelian_group_algebra(std::size_t a, std::size_t b) {
  const std::size_t n = a * b;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h) table[g][h] = ((g / b + h / b) % a) * b + (g % b + h % b) % b;
  }
  return group_algebra(table);
}

std::vector<std::vector<std::size_t>> s3_table() {
  using Perm = std::array<std::size_t, 3>;
  const std::vector<Perm> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      Perm gh{};
      for (std::size_t k = 0; k < 3; ++k) gh[k] = perms[g][perms[h][k]];
      table[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), gh) - perms.begin());
    }
  }
  return table;
}

Algebra s3_group_algebra() { return group_algebra(s3_table()); }

Algebra matrix_algebra(std::size_t k) {
  const std::size_t n = k * k;
  Vector c(n * n * n, Rational(0));
  Vector unit(n, Rational(0));
  for (std::size_t i = 0; i < k; ++i) {
    unit[i * k + i] = 1;
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) c[((i * k + j) * n + (j * k + l)) * n + (i * k + l)] = 1;
    }
  }
  return Algebra(n, std::move(c), std::move(unit));
}

Algebra quaternion_algebra(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw InvalidAlgebra("quaternion parameters must be nonzero");
  Vector c(64, Rational(0));
  auto set = [&](std::size_t x, std::size_t y, std::size_t z, const Rational& v) { c[(x * 4 + y) * 4 + z] = v; };
  for (std::size_t x = 0; x < 4; ++x) {
    set(0, x, x, 1);
    set(x, 0, x, 1);
  }
  // basis 1, i, j, k = ij
  set(1, 1, 0, a);
  set(1, 2, 3, 1);
  set(1, 3, 2, a);
  set(2, 1, 3, -1);
  set(2, 2, 0, b);
  set(2, 3, 1, -b);
  set(3, 1, 2, -a);
  set(3, 2, 1, b);
  set(3, 3, 0, -a * b);
  return Algebra(4, std::move(c), unit_vector(4, 0));
}

Algebra polynomial_quotient(const Polynomial& p) {
  if (p.degree() < 1) throw InvalidAlgebra("quotient by a constant polynomial");
  const Polynomial mod = p.monic();
  const std::size_t n = static_cast<std::size_t>(mod.degree());
  Vector c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial r = Polynomial::monomial(1, static_cast<int>(i + j)) % mod;
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = r.coeff(static_cast<int>(k));
    }
  }
  return Algebra(n, std::move(c), unit_vector(n, 0));
}

Algebra direct_product(const Algebra& a, const Algebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
  Vector c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < na; ++j) {
      for (std::size_t k = 0; k < na; ++k) c[(i * n + j) * n + k] = a.c(i, j, k);
    }
  }
  for (std::size_t i = 0; i < nb; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      for (std::size_t k = 0; k < nb; ++k) c[((na + i) * n + (na + j)) * n + (na + k)] = b.c(i, j, k);
    }
  }
  Vector unit = a.unit();
  unit.insert(unit.end(), b.unit().begin(), b.unit().end());
  return Algebra(n, std::move(c), std::move(unit));
}

Algebra change_basis(const Algebra& a, const Matrix& p) {
  const std::size_t n = a.dim();
  if (p.rows() != n || p.cols() != n) throw DomainError("change of basis has the wrong shape");
  const auto inv = p.inverse();
  if (!inv) throw DomainError("change of basis is singular");
  Vector c(n * n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector prod = *inv * a.multiply(p.column(i), p.column(j));
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = prod[k];
    }
  }
  return Algebra(n, std::move(c), *inv * a.unit());
}

}  // namespace rigid
