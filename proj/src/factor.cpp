#include "bilip/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>

#include "bilip/errors.hpp"
#include "bilip/poly_algorithms.hpp"

namespace bilip {

namespace {

// ---------------------------------------------------------------------------
// Polynomials over F_p, dense, ascending, no trailing zeros.

using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

struct Field {
  u64 p;
  u64 add(u64 a, u64 b) const { return a + b >= p ? a + b - p : a + b; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
};

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

ModPoly reduce_mod(const IntPoly& f, const Field& F) {
  ModPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), F.p);
  trim(r);
  return r;
}

ModPoly sub(ModPoly a, const ModPoly& b, const Field& F) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
  trim(a);
  return a;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  trim(r);
  return r;
}

ModPoly scale(ModPoly a, u64 c, const Field& F) {
  for (auto& x : a) x = F.mul(x, c);
  trim(a);
  return a;
}

// a = q*b + r with deg r < deg b; b nonzero.
void divmod(ModPoly a, const ModPoly& b, ModPoly* q, ModPoly& r, const Field& F) {
  const u64 inv = F.inv(b.back());
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (deg(a) >= deg(b)) {
    const std::size_t shift = a.size() - b.size();
    const u64 c = F.mul(a.back(), inv);
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
    trim(a);
  }
  r = std::move(a);
}

ModPoly rem(const ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly r;
  divmod(a, b, nullptr, r, F);
  return r;
}

ModPoly quo(const ModPoly& a, const ModPoly& b, const Field& F) {
  ModPoly q, r;
  divmod(a, b, &q, r, F);
  return q;
}

ModPoly monic(ModPoly a, const Field& F) { return a.empty() ? a : scale(a, F.inv(a.back()), F); }

ModPoly gcd(ModPoly a, ModPoly b, const Field& F) {
  while (!b.empty()) {
    ModPoly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& m, const Field& F) {
  ModPoly result{1};
  base = rem(base, m, F);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, F), m, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, base, F), m, F);
  }
  return result;
}

// s with a*s = 1 mod m; a and m coprime.
ModPoly inverse_mod(const ModPoly& a, const ModPoly& m, const Field& F) {
  ModPoly r0 = m, r1 = rem(a, m, F), s0, s1{1};
  while (!r1.empty()) {
    ModPoly q, r;
    divmod(r0, r1, &q, r, F);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s = sub(s0, mul(q, s1, F), F);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  return scale(s0, F.inv(r0[0]), F);
}

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly f, const Field& F) {
  std::vector<std::pair<ModPoly, unsigned>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  unsigned i = 0;
  while (deg(f) >= 2 * static_cast<int>(i + 1)) {
    ++i;
    h = powmod(h, Integer(static_cast<unsigned long>(F.p)), f, F);
    ModPoly g = gcd(f, sub(h, x, F), F);
    if (deg(g) > 0) {
      f = quo(f, g, F);
      h = rem(h, f, F);
      out.emplace_back(std::move(g), i);
    }
  }
  if (deg(f) > 0) out.emplace_back(f, static_cast<unsigned>(deg(f)));
  return out;
}

// Cantor-Zassenhaus splitting of a product of irreducibles of degree d (p odd).
void equal_degree(const ModPoly& g, unsigned d, const Field& F, std::mt19937_64& rng,
                  std::vector<ModPoly>& out) {
  if (deg(g) == static_cast<int>(d)) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  for (;;) {
    ModPoly a(g.size() - 1);
    for (auto& c : a) c = coef(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = powmod(a, e, g, F);
    b = sub(b, ModPoly{1}, F);
    ModPoly s = gcd(g, b, F);
    if (deg(s) > 0 && deg(s) < deg(g)) {
      equal_degree(s, d, F, rng, out);
      equal_degree(quo(g, s, F), d, F, rng, out);
      return;
    }
  }
}

// ---------------------------------------------------------------------------
// Integer polynomials.

void trim(IntPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

IntPoly primitive(IntPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Coefficients reduced into (-m/2, m/2].
IntPoly symmetric_mod(IntPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c > half) c -= m;
  }
  trim(a);
  return a;
}

// Exact division over Z; nullopt when b does not divide a.
std::optional<IntPoly> divide_exact(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  IntPoly q(a.size() - b.size() + 1, Integer(0));
  while (a.size() >= b.size()) {
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    const Integer c = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

IntPoly derivative(const IntPoly& a) {
  IntPoly r(a.empty() ? 0 : a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Linear multifactor Hensel lifting of f = lc * prod g_i (mod p), g_i monic,
// until the modulus exceeds bound. Returns the modulus.
Integer hensel_lift(const IntPoly& f, std::vector<IntPoly>& g, const Field& F,
                    const Integer& bound) {
  const std::size_t m = g.size();
  std::vector<ModPoly> gp(m), t(m);
  for (std::size_t i = 0; i < m; ++i) gp[i] = reduce_mod(g[i], F);
  for (std::size_t i = 0; i < m; ++i) {
    ModPoly others{1};
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) others = mul(others, gp[j], F);
    t[i] = inverse_mod(others, gp[i], F);
  }
  const Integer lc = f.back();
  const u64 lc_inv = F.inv(mpz_fdiv_ui(lc.get_mpz_t(), F.p));
  Integer modulus(static_cast<unsigned long>(F.p));
  while (modulus <= bound) {
    IntPoly prod{lc};
    for (const auto& gi : g) prod = mul(prod, gi);
    IntPoly e = f;
    e.resize(std::max(e.size(), prod.size()), Integer(0));
    for (std::size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
    for (auto& c : e) c /= modulus;  // exact
    trim(e);
    const ModPoly ep = scale(reduce_mod(e, F), lc_inv, F);
    for (std::size_t i = 0; i < m; ++i) {
      const ModPoly delta = rem(mul(ep, t[i], F), gp[i], F);
      for (std::size_t k = 0; k < delta.size(); ++k) g[i][k] += modulus * static_cast<unsigned long>(delta[k]);
    }
    modulus *= static_cast<unsigned long>(F.p);
  }
  return modulus;
}

// Subset recombination of lifted monic factors.
std::vector<IntPoly> recombine(IntPoly f, std::vector<IntPoly> lifted, const Integer& modulus) {
  std::vector<IntPoly> out;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    for (;;) {
      IntPoly cand{f.back()};
      for (std::size_t i : idx) cand = symmetric_mod(mul(cand, lifted[i]), modulus);
      cand = primitive(cand);
      if (auto q = divide_exact(f, cand)) {
        out.push_back(cand);
        f = std::move(*q);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
        found = true;
        break;
      }
      // next combination
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(primitive(f));
  return out;
}

bool int_poly_less(const IntPoly& a, const IntPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// ---------------------------------------------------------------------------
// Polynomials over Q in one variable.

using QPoly = std::vector<Rational>;

void trim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void divmod(QPoly a, const QPoly& b, QPoly* q, QPoly& r) {
  if (q) q->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Rational c = a.back() / b.back();
    if (q) (*q)[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.back() = 0;
    trim(a);
  }
  r = std::move(a);
}

QPoly rem(const QPoly& a, const QPoly& b) {
  QPoly r;
  divmod(a, b, nullptr, r);
  return r;
}

QPoly inverse_mod(const QPoly& a, const QPoly& m) {
  QPoly r0 = m, r1 = rem(a, m), s0, s1{Rational(1)};
  while (!r1.empty()) {
    QPoly q, r;
    divmod(r0, r1, &q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  for (auto& c : s0) c /= r0[0];
  return s0;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly derivative(const QPoly& a) {
  QPoly r(a.empty() ? 0 : a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<unsigned long>(i);
  trim(r);
  return r;
}

IntPoly clear_denominators(const QPoly& a) {
  Integer l = 1;
  for (const auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i].get_num() * (l / a[i].get_den());
  return primitive(r);
}

QPoly to_monic_q(const IntPoly& a) {
  QPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = make_rational(a[i], a.back());
  return r;
}

// ---------------------------------------------------------------------------
// Forms.

// Ring on the variables of f that actually occur, in ring order.
Ring support_ring(const Polynomial& f) {
  std::vector<std::string> names;
  for (std::size_t i : f.support()) names.push_back(f.ring().name(i));
  return Ring(names);
}

// Squarefree form in two variables (u, v), neither dividing it.
std::vector<Polynomial> factor_binary(const Polynomial& h) {
  const Ring& ring = h.ring();
  const unsigned d = h.degree().value();
  IntPoly g(d + 1, Integer(0));
  Integer den = 1;
  for (const auto& [m, c] : h.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& [m, c] : h.terms()) g[m[0]] = c.get_num() * (den / c.get_den());
  std::vector<Polynomial> out;
  for (const auto& u : factor_univariate(primitive(g))) {
    const unsigned e = static_cast<unsigned>(u.size() - 1);
    Polynomial f(ring);
    for (unsigned i = 0; i <= e; ++i) f.add_term(Monomial{i, e - i}, Rational(u[i]));
    out.push_back(f);
  }
  return out;
}

// Power series in Y with coefficients in Q[x], truncated.
using Series = std::vector<QPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i)
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      QPoly t = mul(a[i], b[j]);
      if (r[i + j].size() < t.size()) r[i + j].resize(t.size(), Rational(0));
      for (std::size_t k = 0; k < t.size(); ++k) r[i + j][k] += t[k];
      trim(r[i + j]);
    }
  return r;
}

Polynomial series_to_poly(const Series& s, const Ring& ring) {
  Polynomial r(ring);
  for (unsigned j = 0; j < s.size(); ++j)
    for (unsigned i = 0; i < s[j].size(); ++i) r.add_term(Monomial{i, j}, s[j][i]);
  return r;
}

// Factors of a squarefree F(x, y) that is monic of degree d in x.
std::vector<Polynomial> factor_monic_bivariate(const Polynomial& F) {
  const Ring& ring = F.ring();
  const unsigned d = F.degree_in(0);
  const unsigned dy = F.degree_in(1);
  // Choose y = a with F(x, a) squarefree.
  Rational a;
  QPoly base;
  for (int k = 0;; ++k) {
    a = (k % 2 ? -1 : 1) * ((k + 1) / 2);
    const Polynomial s = specialize(F, 1, a);
    base.assign(d + 1, Rational(0));
    for (const auto& [m, c] : s.terms()) base[m[0]] = c;
    if (gcd(base, derivative(base)).size() == 1) break;
    if (k > 4 * static_cast<int>(d * dy) + 10) throw InternalError("no squarefree specialization found");
  }
  std::vector<QPoly> u;
  for (const auto& fac : factor_univariate(clear_denominators(base))) u.push_back(to_monic_q(fac));
  if (u.size() == 1) return {F};

  const Polynomial shifted = shift_variable(F, 1, a);
  const std::size_t n = dy + 1;
  Series target(n);
  for (const auto& [m, c] : shifted.terms()) {
    if (target[m[1]].size() <= m[0]) target[m[1]].resize(m[0] + 1, Rational(0));
    target[m[1]][m[0]] = c;
  }
  for (auto& t : target) trim(t);

  const std::size_t r = u.size();
  std::vector<QPoly> t(r);
  for (std::size_t i = 0; i < r; ++i) {
    QPoly others{Rational(1)};
    for (std::size_t j = 0; j < r; ++j)
      if (j != i) others = mul(others, u[j]);
    t[i] = inverse_mod(others, u[i]);
  }
  std::vector<Series> lifted(r, Series(n));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = u[i];
  for (std::size_t k = 1; k < n; ++k) {
    Series prod{QPoly{Rational(1)}};
    for (const auto& s : lifted) prod = series_mul(prod, s, k + 1);
    const QPoly e = sub(target[k], prod[k]);
    if (e.empty()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i][k] = rem(mul(e, t[i]), u[i]);
  }

  std::vector<Polynomial> out;
  Polynomial rest = shifted;
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    bool found = false;
    for (;;) {
      Series cand{QPoly{Rational(1)}};
      for (std::size_t i : idx) cand = series_mul(cand, lifted[i], n);
      const Polynomial g = series_to_poly(cand, ring);
      try {
        Polynomial q = exact_divide(rest, g);
        out.push_back(g);
        rest = std::move(q);
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + idx[k]);
        found = true;
        break;
      } catch (const InexactDivision&) {
      }
      std::size_t k = s;
      while (k > 0 && idx[k - 1] == lifted.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (std::size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (!rest.is_constant()) out.push_back(rest);
  for (auto& g : out) g = shift_variable(g, 1, -a);
  return out;
}

// Squarefree form in three variables, none dividing it.
std::vector<Polynomial> factor_ternary(const Polynomial& h) {
  const Ring& ring = h.ring();
  const unsigned d = h.degree().value();
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> entry(-3, 3);
  RationalMatrix T = identity_matrix(3), T_inv;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0)
      for (auto& row : T)
        for (auto& c : row) c = entry(rng);
    T_inv = inverse(T);
    if (T_inv.empty()) continue;
    const std::vector<Rational> c0{T[0][0], T[1][0], T[2][0]};
    const std::vector<Rational> c2{T[0][2], T[1][2], T[2][2]};
    if (h.evaluate(c0) != 0 && h.evaluate(c2) != 0) break;
    if (attempt > 1000) throw InternalError("no generic coordinate change found");
  }
  const Polynomial moved = substitute_linear(h, T);
  // Dehomogenize the last variable and make monic in the first.
  const Ring plane({ring.name(0), ring.name(1)});
  Polynomial F = change_ring(specialize(moved, 2, 1), plane);
  F *= Rational(1) / F.coefficient(Monomial{d, 0});
  std::vector<Polynomial> out;
  for (const auto& g : factor_monic_bivariate(F)) {
    const Polynomial back = change_ring(homogenize(g, ring.name(2)), ring);
    out.push_back(substitute_linear(back, T_inv));
  }
  return out;
}

// Q-irreducibility certificate for a form in four or more variables: a generic
// three-dimensional section that stays irreducible.
bool section_irreducible(const Polynomial& h) {
  const Ring section({"s0", "s1", "s2"});
  std::mt19937_64 rng(0xc0ffee);
  std::uniform_int_distribution<int> entry(-5, 5);
  const unsigned d = h.degree().value();
  for (int attempt = 0; attempt < 3; ++attempt) {
    RationalMatrix a(h.ring().size(), std::vector<Rational>(3));
    for (auto& row : a)
      for (auto& c : row) c = entry(rng);
    const Polynomial r = compose_linear(h, a, section);
    if (r.is_zero() || r.degree().value() != d) continue;
    if (squarefree_part(r).degree().value() != d) continue;
    const auto parts = factor_form(r);
    if (parts.size() == 1 && parts.front().verified) return true;
  }
  return false;
}

}  // namespace

std::vector<IntPoly> factor_univariate(const IntPoly& input) {
  IntPoly f = primitive(input);
  trim(f);
  if (f.size() < 2) throw DomainError("factor_univariate needs positive degree");
  if (f.size() == 2) return {f};
  const IntPoly df = derivative(f);

  // Among the first few admissible primes pick the one with fewest factors.
  Field best{0};
  std::size_t best_count = 0;
  int admissible = 0;
  for (u64 p = 3; admissible < 5; p += 2) {
    if (!is_prime(p)) continue;
    const Field F{p};
    if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) continue;
    const ModPoly fp = reduce_mod(f, F);
    if (deg(gcd(fp, reduce_mod(df, F), F)) > 0) continue;
    ++admissible;
    std::size_t count = 0;
    for (const auto& [g, k] : distinct_degree(monic(fp, F), F)) count += deg(g) / k;
    if (best.p == 0 || count < best_count) {
      best = F;
      best_count = count;
    }
  }
  if (best_count == 1) return {f};

  std::mt19937_64 rng(best.p);
  std::vector<ModPoly> modular;
  for (const auto& [g, k] : distinct_degree(monic(reduce_mod(f, best), best), best))
    equal_degree(g, k, best, rng, modular);
  std::sort(modular.begin(), modular.end());

  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  Integer bound = 2 * abs(f.back()) * (norm + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);

  std::vector<IntPoly> lifted;
  for (const auto& g : modular) {
    IntPoly gi(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) gi[i] = static_cast<unsigned long>(g[i]);
    lifted.push_back(gi);
  }
  const Integer modulus = hensel_lift(f, lifted, best, bound);
  std::vector<IntPoly> out = recombine(f, lifted, modulus);
  std::sort(out.begin(), out.end(), int_poly_less);
  return out;
}

std::vector<FormFactor> factor_form(const Polynomial& h) {
  if (h.is_zero() || h.is_constant()) throw DomainError("factor_form needs a nonconstant polynomial");
  if (!h.is_homogeneous()) throw DomainError("factor_form needs a homogeneous polynomial");
  const Ring& ring = h.ring();
  std::vector<FormFactor> out;
  Polynomial rest = normalize(h);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    if (rest.degree_in(i) == 0) continue;
    bool divisible = std::all_of(rest.terms().begin(), rest.terms().end(),
                                 [i](const auto& t) { return t.first[i] > 0; });
    if (!divisible) continue;
    const Polynomial x = Polynomial::variable(ring, i);
    rest = exact_divide(rest, x);
    out.push_back({x, true});
  }
  if (!rest.is_constant()) {
    const Ring sub = support_ring(rest);
    const Polynomial local = change_ring(rest, sub);
    std::vector<Polynomial> parts;
    bool verified = true;
    switch (sub.size()) {
      case 1:
        parts = {local};
        break;
      case 2:
        parts = factor_binary(local);
        break;
      case 3:
        parts = factor_ternary(local);
        break;
      default:
        parts = {local};
        verified = section_irreducible(local);
    }
    for (const auto& p : parts) out.push_back({change_ring(p, ring), verified});
  }
  for (auto& f : out) f.factor = normalize(f.factor);
  std::sort(out.begin(), out.end(), [](const FormFactor& a, const FormFactor& b) {
    const unsigned da = a.factor.degree().value(), db = b.factor.degree().value();
    if (da != db) return da < db;
    return a.factor.to_string() < b.factor.to_string();
  });
  return out;
}

Polynomial shift_variable(const Polynomial& f, std::size_t var, const Rational& shift) {
  const Ring& ring = f.ring();
  const Polynomial moved = Polynomial::variable(ring, var) + Polynomial::constant(ring, shift);
  std::vector<Polynomial> powers{Polynomial::constant(ring, 1)};
  Polynomial r(ring);
  for (const auto& [m, c] : f.terms()) {
    while (powers.size() <= m[var]) powers.push_back(powers.back() * moved);
    Monomial rest = m;
    rest[var] = 0;
    r += Polynomial::term(ring, rest, c) * powers[m[var]];
  }
  return r;
}

Polynomial compose_linear(const Polynomial& f, const RationalMatrix& a, const Ring& target) {
  if (a.size() != f.ring().size()) throw DomainError("matrix rows must match the variable count");
  std::vector<Polynomial> images;
  for (const auto& row : a) {
    if (row.size() != target.size()) throw DomainError("matrix columns must match the target ring");
    Polynomial img(target);
    for (std::size_t j = 0; j < row.size(); ++j) img += Polynomial::variable(target, j) * row[j];
    images.push_back(img);
  }
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Polynomial t = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= images[i].pow(m[i]);
    r += t;
  }
  return r;
}

}  // namespace bilip
