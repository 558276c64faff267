#ifndef RIGID_TESTS_GENERATORS_HPP_
#define RIGID_TESTS_GENERATORS_HPP_

// Small deterministic generators shared by the property tests.

#include <cstdint>
#include <random>

#include "rigid/matrix.hpp"
#include "rigid/series.hpp"

namespace rigid::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  // Uniform integer in [lo, hi].
  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  long nonzero(long lo, long hi) {
    while (true) {
      long v = integer(lo, hi);
      if (v != 0) return v;
    }
  }
  bool coin() { return rng_() & 1U; }
  std::mt19937_64& engine() { return rng_; }

  // prod (1 - a t)^(+-1) times an optional quadratic factor; f(0) = 1.
  RationalFunction zeta_like(int max_factors = 3) {
    Polynomial num = Polynomial::constant(1);
    Polynomial den = Polynomial::constant(1);
    const int count = static_cast<int>(integer(1, max_factors));
    for (int i = 0; i < count; ++i) {
      Polynomial lin{1, Rational(-nonzero(-3, 3))};
      (coin() ? den : num) *= lin;
    }
    if (coin()) {
      Polynomial quad{1, Rational(integer(-2, 2)), Rational(nonzero(1, 3))};
      (coin() ? den : num) *= quad;
    }
    return {num, den};
  }

  Matrix integer_matrix(std::size_t n, long lo, long hi) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(lo, hi);
    }
    return m;
  }

  Matrix invertible_integer_matrix(std::size_t n, long lo, long hi) {
    while (true) {
      Matrix m = integer_matrix(n, lo, hi);
      if (m.determinant() != 0) return m;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rigid::testing

#endif  // RIGID_TESTS_GENERATORS_HPP_
