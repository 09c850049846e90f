#include "bilip/hilbert.hpp"

#include <algorithm>

#include "bilip/errors.hpp"
#include "bilip/poly_algorithms.hpp"

namespace bilip {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

// a - t^shift * b
IntPoly sub_shifted(IntPoly a, const IntPoly& b, unsigned shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, Integer(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  trim(a);
  return a;
}

IntPoly one_minus_t_power(unsigned d) {
  IntPoly p(d + 1, Integer(0));
  p[0] += 1;
  p[d] -= 1;
  trim(p);
  return p;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) return false;
  return true;
}

IntPoly numerator_of_minimal(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {Integer(1)};
  for (const auto& m : gens)
    if (m.is_one()) return {};
  if (pairwise_coprime(gens)) {
    IntPoly acc{Integer(1)};
    for (const auto& m : gens) acc = mul(acc, one_minus_t_power(m.degree()));
    return acc;
  }
  // Pivot on the generator of largest degree.
  std::vector<Monomial> rest = gens;
  auto pivot_it = std::max_element(rest.begin(), rest.end(), [](const Monomial& a, const Monomial& b) {
    return a.degree() < b.degree();
  });
  const Monomial pivot = *pivot_it;
  rest.erase(pivot_it);
  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (const auto& m : rest) colon.push_back(m / gcd(m, pivot));
  return sub_shifted(numerator_of_minimal(rest), numerator_of_minimal(minimize_monomials(colon)),
                     pivot.degree());
}

std::vector<Polynomial> reduced_generators(const Ideal& ideal) {
  if (ideal.generators().size() == 1 && !ideal.generators().front().is_constant())
    return {squarefree_part(ideal.generators().front())};
  return ideal.generators();
}

std::string fresh_variable(const Ring& ring) {
  std::string name = "h_";
  while (ring.index_of(name)) name += "_";
  return name;
}

}  // namespace

IntPoly hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars) {
  for (const auto& m : gens)
    if (m.size() != nvars) throw DomainError("monomial length differs from variable count");
  return numerator_of_minimal(minimize_monomials(gens));
}

HilbertData hilbert_data(const IntPoly& numerator, std::size_t nvars) {
  IntPoly k = numerator;
  trim(k);
  if (k.empty()) throw DomainError("ideal defines the empty set");
  std::size_t cancelled = 0;
  auto value_at_one = [](const IntPoly& p) {
    Integer s = 0;
    for (const auto& c : p) s += c;
    return s;
  };
  while (value_at_one(k) == 0) {
    // Synthetic division by (1 - t): q_i = sum_{j<=i} k_j.
    IntPoly q(k.size() - 1, Integer(0));
    Integer running = 0;
    for (std::size_t i = 0; i + 1 < k.size(); ++i) {
      running += k[i];
      q[i] = running;
    }
    k = std::move(q);
    trim(k);
    ++cancelled;
  }
  if (cancelled > nvars) throw InternalError("Hilbert numerator has too many (1-t) factors");
  const Integer degree = value_at_one(k);
  if (degree < 1) throw InternalError("non-positive Hilbert degree");
  HilbertData out;
  out.numerator = numerator;
  trim(out.numerator);
  out.nvars = nvars;
  out.krull_dimension = static_cast<unsigned>(nvars - cancelled);
  out.degree = degree.get_ui();
  return out;
}

HilbertData dim_degree_homogeneous(const Ideal& ideal) {
  if (!ideal.is_homogeneous()) throw DomainError("generators must be homogeneous");
  const Ideal reduced(ideal.ring(), reduced_generators(ideal));
  const auto basis = buchberger(reduced, MonomialOrder::grevlex(ideal.ring().size()));
  return hilbert_data(hilbert_numerator(lead_term_ideal(basis), ideal.ring().size()),
                      ideal.ring().size());
}

HilbertData affine_degree(const Ideal& ideal) {
  const Ideal reduced(ideal.ring(), reduced_generators(ideal));
  const auto order = MonomialOrder::grevlex(ideal.ring().size());
  const auto basis = buchberger(reduced, order);
  if (normal_form(Polynomial::constant(ideal.ring(), Rational(1)), basis).is_zero())
    throw DomainError("ideal defines the empty set");

  const std::string t = fresh_variable(ideal.ring());
  const Ring extended = ideal.ring().with_variable(t);
  std::vector<Polynomial> homogenized;
  for (const auto& g : basis.elements()) homogenized.push_back(homogenize(g, t));
  if (!is_groebner_basis(homogenized, MonomialOrder::grevlex(extended.size())))
    throw InternalError("homogenized graded basis is not a Groebner basis");

  HilbertData data = dim_degree_homogeneous(Ideal(extended, homogenized));
  data.krull_dimension -= 1;
  return data;
}

std::uint64_t multiplicity_homogeneous_germ(const Ideal& ideal) {
  return dim_degree_homogeneous(ideal).degree;
}

}  // namespace bilip
