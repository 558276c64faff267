#ifndef RIGID_FACTOR_HPP_
#define RIGID_FACTOR_HPP_

#include <vector>

#include "rigid/polynomial.hpp"

namespace rigid {

struct Factor {
  Polynomial factor;  // monic, irreducible over Q
  int multiplicity = 0;
};

// Irreducible factorization over Q. Factors are monic, pairwise distinct and
// sorted by (degree, coefficients); constants yield an empty list. The input
// equals leading() * prod(factor^multiplicity).
//
// Squarefree decomposition (Yun), then for each squarefree part a Zassenhaus
// factorization: Cantor-Zassenhaus modulo a small prime, linear Hensel
// lifting past the Mignotte bound, and subset recombination.
std::vector<Factor> factor_over_Q(const Polynomial& p);

// (part, multiplicity) pairs from Yun's algorithm, parts monic squarefree.
std::vector<Factor> squarefree_decomposition(const Polynomial& p);

bool is_irreducible(const Polynomial& p);

// q with q^d == p for monic p; NotAPerfectPower when no such q exists.
Polynomial poly_nth_root(const Polynomial& p, unsigned d);

}  // namespace rigid

#endif  // RIGID_FACTOR_HPP_
