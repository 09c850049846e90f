#include "bilip/poly_algorithms.hpp"

#include <algorithm>
#include <map>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

using Univariate = std::vector<Polynomial>;  // coefficient of var^i at index i

Univariate to_univariate(const Polynomial& f, std::size_t var) {
  Univariate coeffs(f.degree_in(var) + 1, Polynomial(f.ring()));
  for (const auto& [m, c] : f.terms()) {
    Monomial rest = m;
    rest[var] = 0;
    coeffs[m[var]].add_term(rest, c);
  }
  return coeffs;
}

Polynomial var_power(const Ring& ring, std::size_t var, unsigned e) {
  Monomial m(ring.size());
  m[var] = e;
  return Polynomial::term(ring, m, Rational(1));
}

Polynomial var_coefficient(const Polynomial& f, std::size_t var, unsigned power) {
  Polynomial c(f.ring());
  for (const auto& [m, coef] : f.terms()) {
    if (m[var] != power) continue;
    Monomial rest = m;
    rest[var] = 0;
    c.add_term(rest, coef);
  }
  return c;
}

// lc(b)^(deg a - deg b + 1) * a mod b, with respect to var (deg_var b >= 1).
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const unsigned db = b.degree_in(var);
  const unsigned da = a.degree_in(var);
  if (da < db) return a;
  const Polynomial lcb = var_coefficient(b, var, db);
  for (unsigned k = da - db + 1; k-- > 0;) {
    const Polynomial c = var_coefficient(a, var, db + k);
    a = lcb * a;
    if (!c.is_zero()) a -= c * var_power(a.ring(), var, k) * b;
  }
  return a;
}

Polynomial primitive_part_in(const Polynomial& f, std::size_t var) {
  return exact_divide(f, content_in(f, var));
}

// Common variable of lowest combined degree, if any.
std::optional<std::size_t> common_variable(const Polynomial& f, const Polynomial& g) {
  std::optional<std::size_t> best;
  unsigned best_degree = 0;
  for (std::size_t v = 0; v < f.ring().size(); ++v) {
    const unsigned df = f.degree_in(v);
    const unsigned dg = g.degree_in(v);
    if (df == 0 || dg == 0) continue;
    if (!best || df + dg < best_degree) {
      best = v;
      best_degree = df + dg;
    }
  }
  return best;
}

void yun(const Polynomial& a, std::size_t var, std::map<unsigned, Polynomial>& out) {
  const Polynomial da = derivative(a, var);
  const Polynomial g = gcd(a, da);
  Polynomial b = exact_divide(a, g);
  Polynomial c = exact_divide(da, g);
  Polynomial d = c - derivative(b, var);
  for (unsigned i = 1; b.degree_in(var) > 0; ++i) {
    const Polynomial factor = gcd(b, d);
    b = exact_divide(b, factor);
    c = exact_divide(d, factor);
    d = c - derivative(b, var);
    if (!factor.is_constant()) {
      auto [it, inserted] = out.try_emplace(i, factor);
      if (!inserted) it->second *= factor;
    }
  }
}

void decompose(const Polynomial& f, std::map<unsigned, Polynomial>& out) {
  if (f.is_constant()) return;
  const std::size_t var = f.support().front();
  const Polynomial content = content_in(f, var);
  yun(exact_divide(f, content), var, out);
  decompose(content, out);
}

}  // namespace

Polynomial content_in(const Polynomial& f, std::size_t var) {
  Polynomial acc(f.ring());
  for (const auto& coeff : to_univariate(f, var)) {
    if (coeff.is_zero()) continue;
    acc = gcd(acc, coeff);
    if (acc.is_constant()) break;
  }
  return acc.is_zero() ? acc : normalize(acc);
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch();
  if (f.is_zero()) return normalize(g);
  if (g.is_zero()) return normalize(f);
  const Polynomial one = Polynomial::constant(f.ring(), Rational(1));
  if (f.is_constant() || g.is_constant()) return one;

  const auto var = common_variable(f, g);
  if (!var) {
    // Some variable occurs in only one argument: the gcd divides its content there.
    const std::size_t v = f.support().front();
    if (g.degree_in(v) == 0) return gcd(content_in(f, v), g);
    return gcd(f, content_in(g, v));
  }
  const std::size_t v = *var;
  const Polynomial cf = content_in(f, v);
  const Polynomial cg = content_in(g, v);
  const Polynomial content = gcd(cf, cg);
  Polynomial a = exact_divide(f, cf);
  Polynomial b = exact_divide(g, cg);
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  // Subresultant remainder sequence; only the last member is made primitive.
  Polynomial g_factor = one;
  Polynomial h_factor = one;
  while (!b.is_zero() && b.degree_in(v) > 0) {
    const unsigned delta = a.degree_in(v) - b.degree_in(v);
    Polynomial r = pseudo_remainder(a, b, v);
    a = std::move(b);
    if (r.is_zero()) {
      b = std::move(r);
      break;
    }
    b = exact_divide(r, g_factor * h_factor.pow(delta));
    g_factor = var_coefficient(a, v, a.degree_in(v));
    if (delta == 0) continue;
    h_factor = delta == 1 ? g_factor : exact_divide(g_factor.pow(delta), h_factor.pow(delta - 1));
  }
  const Polynomial primitive = b.is_zero() ? primitive_part_in(a, v) : one;
  return normalize(content * primitive);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const Polynomial& f) {
  if (f.is_constant()) throw DomainError("squarefree decomposition of a constant");
  std::map<unsigned, Polynomial> by_exponent;
  decompose(f, by_exponent);
  std::vector<SquarefreeFactor> out;
  for (auto& [e, p] : by_exponent) out.push_back({normalize(p), e});
  return out;
}

Polynomial squarefree_part(const Polynomial& f) {
  Polynomial acc = Polynomial::constant(f.ring(), Rational(1));
  for (const auto& sf : squarefree_decomposition(f)) acc *= sf.factor;
  return normalize(acc);
}

}  // namespace bilip
