#include "rigid/finite_field.hpp"

#include <string>

#include "rigid/errors.hpp"

namespace rigid {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

constexpr std::uint64_t kMaxFieldSize = 1U << 16;

}  // namespace

std::pair<unsigned, unsigned> prime_power(std::uint64_t q) {
  if (q < 2 || q > kMaxFieldSize) throw UnsupportedField("field size " + std::to_string(q) + " out of range");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw UnsupportedField(std::to_string(q) + " is not a prime power");
  return {static_cast<unsigned>(p), k};
}

FiniteField::FiniteField(unsigned p, unsigned k) : p_(p), k_(k) {
  if (!is_prime(p) || k == 0) throw UnsupportedField("GF(p^k) needs a prime p and k >= 1");
  std::uint64_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= p;
    if (size > kMaxFieldSize) throw UnsupportedField("field larger than 2^16");
  }
  size_ = static_cast<std::uint32_t>(size);
  const std::uint32_t order = size_ - 1;
  exp_.assign(order, 0);
  log_.assign(size_, 0);

  // Walk monic candidates m = x^k + c(x) with c encoded like an element.
  // m is primitive iff x has multiplicative order exactly p^k - 1 mod m.
  std::vector<unsigned> digits(k);
  for (std::uint32_t c = 0; c < size_; ++c) {
    std::uint32_t rest = c;
    for (unsigned i = 0; i < k; ++i) {
      digits[i] = rest % p;
      rest /= p;
    }
    if (digits[0] == 0) continue;
    modulus_.assign(digits.begin(), digits.end());
    modulus_.push_back(1);
    // multiply-by-x on encoded elements, reducing x^k = -c(x)
    std::vector<unsigned> v(k, 0);
    v[0] = 1;
    bool primitive = true;
    for (std::uint32_t i = 0; i < order; ++i) {
      std::uint32_t code = 0;
      for (unsigned j = k; j-- > 0;) code = code * p + v[j];
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[i] = code;
      const unsigned top = v[k - 1];
      for (unsigned j = k - 1; j > 0; --j) v[j] = v[j - 1];
      v[0] = 0;
      for (unsigned j = 0; j < k; ++j) v[j] = (v[j] + (p - digits[j]) * top) % p;
    }
    if (!primitive) continue;
    std::uint32_t code = 0;
    for (unsigned j = k; j-- > 0;) code = code * p + v[j];
    if (code != 1) continue;
    for (std::uint32_t i = 0; i < order; ++i) log_[exp_[i]] = i;
    return;
  }
  throw DomainError("no primitive polynomial found");
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (p_ == 2) return a ^ b;
  Element out = 0, scale = 1;
  while (a > 0 || b > 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (p_ == 2) return a;
  Element out = 0, scale = 1;
  while (a > 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) + log_[b]) % (size_ - 1)];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw DomainError("inverse of zero in a finite field");
  return exp_[(size_ - 1 - log_[a]) % (size_ - 1)];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t n) const {
  if (n == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (n % (size_ - 1))) % (size_ - 1)];
}

FiniteField::Element FiniteField::from_int(long n) const {
  const long m = static_cast<long>(p_);
  return static_cast<Element>(((n % m) + m) % m);
}

std::uint32_t FiniteField::log(Element a) const {
  if (a == 0) throw DomainError("logarithm of zero in a finite field");
  return log_[a];
}

bool FiniteField::is_square(Element a) const {
  if (a == 0 || p_ == 2) return true;
  return log_[a] % 2 == 0;
}

unsigned FiniteField::trace(Element a) const {
  Element sum = 0, conj = a;
  for (unsigned i = 0; i < k_; ++i) {
    sum = add(sum, conj);
    conj = pow(conj, p_);
  }
  return sum;  // lies in the prime field, whose codes are 0..p-1
}

FiniteField::Element FiniteField::embed_generator(const FiniteField& sub) const {
  if (sub.p_ != p_ || k_ % sub.k_ != 0) throw DomainError("not a subfield");
  const auto& m = sub.modulus();
  for (Element z = 1; z < size_; ++z) {
    Element value = 0;
    for (std::size_t i = m.size(); i-- > 0;) value = add(mul(value, z), from_int(m[i]));
    // a root of a primitive polynomial generates sub's multiplicative group
    if (value == 0) return z;
  }
  throw DomainError("no root of the subfield modulus");
}

}  // namespace rigid
