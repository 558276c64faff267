#include "rigid/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include "rigid/errors.hpp"

namespace rigid {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over Z/p for a small odd prime p, lowest degree first.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const u64 x = i < a.size() ? a[i] : 0;
    const u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + y) % p;
  }
  trim(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b, u64 p) {
  if (b.empty()) throw DomainError("modular polynomial division by zero");
  ModPoly r = a;
  if (deg(a) < deg(b)) return {{}, r};
  ModPoly q(static_cast<std::size_t>(deg(a) - deg(b)) + 1, 0);
  const u64 li = inv_mod(b.back(), p);
  for (int i = deg(a); i >= deg(b); --i) {
    const u64 c = r[static_cast<std::size_t>(i)] * li % p;
    if (c == 0) continue;
    q[static_cast<std::size_t>(i - deg(b))] = c;
    for (int j = 0; j <= deg(b); ++j) {
      auto& slot = r[static_cast<std::size_t>(i - deg(b) + j)];
      slot = (slot + p - c * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  trim(q);
  trim(r);
  return {q, r};
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b, u64 p) { return mp_divmod(a, b, p).second; }

ModPoly mp_monic(const ModPoly& a, u64 p) {
  if (a.empty()) return a;
  const u64 li = inv_mod(a.back(), p);
  ModPoly r = a;
  for (auto& c : r) c = c * li % p;
  return r;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    ModPoly r = mp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

// s*a + t*b == 1 for coprime a, b.
std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (deg(r0) != 0) throw DomainError("modular Bezout on non-coprime inputs");
  const u64 li = inv_mod(r0[0], p);
  for (auto& c : s0) c = c * li % p;
  for (auto& c : t0) c = c * li % p;
  return {s0, t0};
}

ModPoly mp_powmod(ModPoly base, const Integer& exponent, const ModPoly& m, u64 p) {
  ModPoly result{1};
  base = mp_mod(base, m, p);
  const auto bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mp_mod(mp_mul(result, result, p), m, p);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = mp_mod(mp_mul(result, base, p), m, p);
  }
  return result;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

ModPoly reduce(const std::vector<Integer>& f, u64 p) {
  ModPoly r(f.size());
  const Integer pz(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer m = f[i] % pz;
    if (m < 0) m += pz;
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

// Equal-degree splitting of a monic squarefree g whose factors all have degree k.
void equal_degree_split(const ModPoly& g, int k, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == k) {
    out.push_back(g);
    return;
  }
  Integer pk = 1;
  for (int i = 0; i < k; ++i) pk *= static_cast<unsigned long>(p);
  const Integer exponent = (pk - 1) / 2;
  while (true) {
    ModPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = rng() % p;
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = mp_sub(mp_powmod(a, exponent, g, p), ModPoly{1}, p);
    ModPoly d = mp_gcd(b, g, p);
    if (deg(d) > 0 && deg(d) < deg(g)) {
      equal_degree_split(d, k, p, rng, out);
      equal_degree_split(mp_divmod(g, d, p).first, k, p, rng, out);
      return;
    }
  }
}

// Monic irreducible factors of a monic squarefree f over Z/p.
std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::mt19937_64 rng(0x5eedULL + p);
  std::vector<ModPoly> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const Integer pz(static_cast<unsigned long>(p));
  for (int i = 1; deg(f) >= 2 * i; ++i) {
    h = mp_powmod(h, pz, f, p);
    ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
    if (deg(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      f = mp_divmod(f, g, p).first;
      h = mp_mod(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back(mp_monic(f, p));
  return out;
}

// ---------------------------------------------------------------------------
// Integer polynomials (vectors of Integer, lowest degree first).

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

ZPoly from_mod(const ModPoly& a) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = static_cast<unsigned long>(a[i]);
  return r;
}

// Symmetric residues in (-m/2, m/2].
ZPoly symmetric_mod(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Integer v = a[i] % m;
    if (v < 0) v += m;
    if (v > half) v -= m;
    r[i] = v;
  }
  ztrim(r);
  return r;
}

// Exact division of monic integer polynomials; empty optional-like flag on failure.
bool zdivides(const ZPoly& f, const ZPoly& g, ZPoly& quotient) {
  if (g.empty() || g.size() > f.size()) return false;
  ZPoly rem = f;
  const int dg = static_cast<int>(g.size()) - 1;
  ZPoly q(f.size() - g.size() + 1, Integer(0));
  for (int i = static_cast<int>(f.size()) - 1; i >= dg; --i) {
    const Integer& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (top % g.back() != 0) return false;
    const Integer c = top / g.back();
    q[static_cast<std::size_t>(i - dg)] = c;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= c * g[static_cast<std::size_t>(j)];
  }
  for (const auto& c : rem) {
    if (c != 0) return false;
  }
  ztrim(q);
  quotient = std::move(q);
  return true;
}

// Lifts f == g*h (mod p) to f == G*H (mod p^k) with p^k >= bound; g, h monic.
std::pair<ZPoly, ZPoly> hensel_lift(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p,
                                    const Integer& bound) {
  auto [s, t] = mp_bezout(g0, h0, p);
  ZPoly g = from_mod(g0);
  ZPoly h = from_mod(h0);
  const Integer pz(static_cast<unsigned long>(p));
  Integer pk = pz;
  while (pk < bound) {
    ZPoly gh = zmul(g, h);
    ZPoly e(f.size(), Integer(0));
    for (std::size_t i = 0; i < f.size(); ++i) {
      e[i] = f[i] - (i < gh.size() ? gh[i] : Integer(0));
      e[i] /= pk;  // exact by the lifting invariant
    }
    ztrim(e);
    const ModPoly ep = reduce(e, p);
    auto [q, a] = mp_divmod(mp_mul(ep, t, p), g0, p);
    ModPoly b = mp_add(mp_mul(ep, s, p), mp_mul(q, h0, p), p);
    // keep the reductions modulo the original factors: a has degree < deg g, b < deg h
    for (std::size_t i = 0; i < a.size(); ++i) g[i] += pk * static_cast<unsigned long>(a[i]);
    for (std::size_t i = 0; i < b.size(); ++i) h[i] += pk * static_cast<unsigned long>(b[i]);
    pk *= pz;
    g = symmetric_mod(g, pk);
    h = symmetric_mod(h, pk);
  }
  return {g, h};
}

ModPoly product_mod(const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi, u64 p) {
  ModPoly r{1};
  for (std::size_t i = lo; i < hi; ++i) r = mp_mul(r, fs[i], p);
  return r;
}

void multifactor_lift(const ZPoly& f, const std::vector<ModPoly>& fs, std::size_t lo, std::size_t hi, u64 p,
                      const Integer& bound, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(f);
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  auto [g, h] = hensel_lift(f, product_mod(fs, lo, mid, p), product_mod(fs, mid, hi, p), p, bound);
  multifactor_lift(g, fs, lo, mid, p, bound, out);
  multifactor_lift(h, fs, mid, hi, p, bound, out);
}

bool is_prime_small(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Monic squarefree f in Z[x] of degree >= 2 -> monic irreducible factors.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  // Pick the prime (among the first few admissible) giving the fewest modular factors.
  u64 best_p = 0;
  std::vector<ModPoly> best;
  int admissible = 0;
  for (u64 p = 3; admissible < 6; p += 2) {
    if (!is_prime_small(p)) continue;
    ModPoly fp = reduce(f, p);
    if (deg(fp) != n) continue;
    if (deg(mp_gcd(fp, mp_derivative(fp, p), p)) != 0) continue;
    ++admissible;
    auto fs = factor_mod_p(fp, p);
    if (best_p == 0 || fs.size() < best.size()) {
      best_p = p;
      best = std::move(fs);
    }
    if (best.size() == 1) break;
  }
  if (best.size() == 1) return {f};

  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer mignotte = (floor_sqrt(norm2) + 1) << static_cast<unsigned>(n);
  const Integer bound = 2 * mignotte + 1;
  std::vector<ZPoly> lifted;
  multifactor_lift(f, best, 0, best.size(), best_p, bound, lifted);
  Integer modulus = static_cast<unsigned long>(best_p);
  while (modulus < bound) modulus *= static_cast<unsigned long>(best_p);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly cand{1};
      for (auto i : idx) cand = symmetric_mod(zmul(cand, pool[i]), modulus);
      ZPoly quotient;
      const bool const_ok = cand.empty() || rest[0] == 0 || (cand[0] != 0 && rest[0] % cand[0] == 0);
      if (const_ok && zdivides(rest, cand, quotient)) {
        result.push_back(cand);
        rest = std::move(quotient);
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) pool.erase(pool.begin() + static_cast<long>(*it));
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + (k - 1)) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.size() > 1) result.push_back(rest);
  return result;
}

// Monic irreducible factors over Q of a squarefree polynomial of degree >= 1.
std::vector<Polynomial> factor_squarefree(const Polynomial& a) {
  if (a.degree() == 1) return {a.monic()};
  auto [scale, prim] = a.primitive_integer();
  const int n = a.degree();
  const Integer lc = prim.back();
  // G(x) = lc^(n-1) * F(x / lc) is monic with integer coefficients.
  ZPoly monic(prim.size());
  Integer power = 1;  // lc^(n-1-i) for i from n-1 down
  for (int i = n; i >= 0; --i) {
    if (i == n) {
      monic[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    monic[static_cast<std::size_t>(i)] = prim[static_cast<std::size_t>(i)] * power;
    power *= lc;
  }
  std::vector<Polynomial> out;
  for (const auto& g : zassenhaus(monic)) {
    // back-substitute x -> lc * x and take the monic rational part
    Vector coeffs(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) coeffs[i] = Rational(g[i]);
    out.push_back(Polynomial(coeffs).scale_variable(Rational(lc)).monic());
  }
  return out;
}

bool coeff_less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

std::vector<Factor> squarefree_decomposition(const Polynomial& p) {
  std::vector<Factor> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = p.monic();
  const Polynomial df = f.derivative();
  Polynomial a = gcd(f, df);
  Polynomial b = f / a;
  Polynomial c = df / a;
  Polynomial d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    Polynomial ai = gcd(b, d);
    b = b / ai;
    c = d / ai;
    d = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai, i});
  }
  return out;
}

std::vector<Factor> factor_over_Q(const Polynomial& p) {
  std::vector<Factor> out;
  for (const auto& piece : squarefree_decomposition(p)) {
    for (auto& irreducible : factor_squarefree(piece.factor)) out.push_back({std::move(irreducible), piece.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) { return coeff_less(x.factor, y.factor); });
  return out;
}

bool is_irreducible(const Polynomial& p) {
  if (p.degree() < 1) return false;
  const auto fs = factor_over_Q(p);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

Polynomial poly_nth_root(const Polynomial& p, unsigned d) {
  if (d == 0) throw DomainError("zeroth root requested");
  if (p.is_zero() || p.leading() != 1) throw DomainError("poly_nth_root expects a monic polynomial");
  if (d == 1) return p;
  Polynomial root = Polynomial::constant(1);
  for (const auto& f : factor_over_Q(p)) {
    if (f.multiplicity % static_cast<int>(d) != 0) {
      throw NotAPerfectPower(p.to_string() + " is not a perfect " + std::to_string(d) + "-th power");
    }
    root *= f.factor.pow(static_cast<unsigned>(f.multiplicity) / d);
  }
  return root;
}

}  // namespace rigid
