#ifndef RIGID_FINITE_FIELD_HPP_
#define RIGID_FINITE_FIELD_HPP_

#include <cstdint>
#include <vector>

namespace rigid {

// GF(p^k) with p^k <= 2^16, realized as Z/p[x]/(m) for the first primitive m
// in lexicographic order. Elements are encoded as integers sum c_i p^i where
// c_i is the coefficient of x^i; 0 is zero and 1 is one.
class FiniteField {
 public:
  using Element = std::uint32_t;

  // Throws UnsupportedField when p is not prime, k == 0 or p^k > 2^16.
  FiniteField(unsigned p, unsigned k);

  unsigned characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return size_; }
  // coefficients of the defining polynomial, lowest first, monic
  const std::vector<unsigned>& modulus() const { return modulus_; }

  Element add(Element a, Element b) const;
  Element neg(Element a) const;
  Element sub(Element a, Element b) const { return add(a, neg(b)); }
  Element mul(Element a, Element b) const;
  Element inv(Element a) const;  // throws DomainError on 0
  Element pow(Element a, std::uint64_t n) const;
  Element from_int(long n) const;  // image of an integer
  Element generator() const { return size_ == 2 ? 1 : exp_[1]; }  // the class of x
  // discrete logarithm to the base generator(); throws DomainError on 0
  std::uint32_t log(Element a) const;
  bool is_square(Element a) const;
  // absolute trace to GF(p), as an integer in [0, p)
  unsigned trace(Element a) const;

  // An element of `this` with the same minimal polynomial as sub's
  // generator, so that sub.generator()^j -> result^j embeds sub. Throws
  // DomainError when sub is not a subfield.
  Element embed_generator(const FiniteField& sub) const;

 private:
  unsigned p_, k_;
  std::uint32_t size_;
  std::vector<unsigned> modulus_;
  std::vector<Element> exp_;  // exp_[i] = x^i, i < size - 1
  std::vector<std::uint32_t> log_;
};

// Every prime power q <= 2^16 as (p, k); throws UnsupportedField otherwise.
std::pair<unsigned, unsigned> prime_power(std::uint64_t q);

}  // namespace rigid

#endif  // RIGID_FINITE_FIELD_HPP_
