#ifndef RIGID_RATIONAL_HPP_
#define RIGID_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace rigid {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation, which is exactly the invariant we need.
using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
// Throws DomainError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when q = 1.
std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

Integer floor_sqrt(const Integer& n);

// Exact square root if n is a perfect square, otherwise -1.
Integer exact_sqrt(const Integer& n);

Integer binomial(long n, long k);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

// Comma separated list of rationals, as accepted on the command line.
Vector parse_rational_list(std::string_view text);

}  // namespace rigid

#endif  // RIGID_RATIONAL_HPP_
