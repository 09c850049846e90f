#include "bilip/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

struct Reducer {
  Monomial lead;
  Rational lead_coef;
  const Polynomial* poly;
};

Polynomial reduce(const Polynomial& f, const std::vector<Reducer>& reducers,
                  const MonomialOrder& order) {
  std::map<Monomial, Rational, Descending> work(f.terms().begin(), f.terms().end(),
                                                Descending{&order});
  Polynomial remainder(f.ring());
  while (!work.empty()) {
    auto top = work.begin();
    const Monomial m = top->first;
    const Rational c = top->second;
    auto it = std::find_if(reducers.begin(), reducers.end(),
                           [&](const Reducer& r) { return r.lead.divides(m); });
    if (it == reducers.end()) {
      remainder.add_term(m, c);
      work.erase(top);
      continue;
    }
    const Monomial shift = m / it->lead;
    const Rational factor = c / it->lead_coef;
    for (const auto& [gm, gc] : it->poly->terms()) {
      const Monomial target = gm * shift;
      auto [slot, inserted] = work.try_emplace(target, -factor * gc);
      if (!inserted) {
        slot->second -= factor * gc;
        if (slot->second == 0) work.erase(slot);
      }
    }
  }
  return remainder;
}

std::vector<Reducer> make_reducers(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  std::vector<Reducer> out;
  out.reserve(polys.size());
  for (const auto& p : polys) {
    auto [m, c] = p.leading_term(order);
    out.push_back({m, c, &p});
  }
  return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order) {
  const auto [mf, cf] = f.leading_term(order);
  const auto [mg, cg] = g.leading_term(order);
  const Monomial l = lcm(mf, mg);
  return Polynomial::term(f.ring(), l / mf, Rational(1 / cf)) * f -
         Polynomial::term(g.ring(), l / mg, Rational(1 / cg)) * g;
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

}  // namespace

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  if (generators_.empty()) throw DomainError("ideal needs at least one generator");
  for (const auto& g : generators_) {
    if (!(g.ring() == ring_)) throw RingMismatch();
    if (g.is_zero()) throw DomainError("zero generator in ideal");
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_homogeneous(); });
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().is_constant();
}

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order) {
  const Ring& ring = ideal.ring();
  if (order.nvars() != ring.size()) throw DomainError("order and ring sizes differ");

  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators()) {
    Polynomial monic = make_monic(g, order);
    if (std::find(basis.begin(), basis.end(), monic) == basis.end()) basis.push_back(monic);
  }
  // Deterministic processing order independent of how the input was listed.
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    const auto la = a.leading_term(order).first;
    const auto lb = b.leading_term(order).first;
    if (la != lb) return order.less(la, lb);
    return a.terms() < b.terms();
  });

  std::vector<Monomial> leads;
  for (const auto& g : basis) leads.push_back(g.leading_term(order).first);

  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pairs_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lcm(leads[i], leads[k])});
      open.insert({i, k});
    }
  };
  for (std::size_t k = 0; k < basis.size(); ++k) add_pairs_for(k);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      return order.less(a.lcm, b.lcm);
    });
    const Pair pair = *best;
    pending.erase(best);
    open.erase({pair.i, pair.j});

    if (coprime(leads[pair.i], leads[pair.j])) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = leads[k].divides(pair.lcm) && !is_open(pair.i, k) && !is_open(pair.j, k);
    }
    if (chain) continue;

    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], order);
    const Polynomial r = reduce(s, make_reducers(basis, order), order);
    if (r.is_zero()) continue;
    if (r.is_constant()) {
      return GroebnerBasis(ring, order, {Polynomial::constant(ring, Rational(1))});
    }
    basis.push_back(make_monic(r, order));
    leads.push_back(basis.back().leading_term(order).first);
    add_pairs_for(basis.size() - 1);
  }

  for (const auto& g : basis)
    if (g.is_constant()) return GroebnerBasis(ring, order, {Polynomial::constant(ring, Rational(1))});

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      redundant = leads[i] != leads[j] || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Interreduce; leading monomials are unchanged so one pass suffices.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = make_monic(reduce(minimal[i], make_reducers(others, order), order), order);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(a.leading_term(order).first, b.leading_term(order).first);
  });
  return GroebnerBasis(ring, order, std::move(minimal));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& basis) {
  if (!(f.ring() == basis.ring())) throw RingMismatch();
  return reduce(f, make_reducers(basis.elements(), basis.order()), basis.order());
}

std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = i != j && gens[j].divides(gens[i]);
    if (!redundant) out.push_back(gens[i]);
  }
  return out;
}

std::vector<Monomial> lead_term_ideal(const GroebnerBasis& basis) {
  std::vector<Monomial> leads;
  for (const auto& g : basis.elements()) leads.push_back(g.leading_term(basis.order()).first);
  auto minimal = minimize_monomials(leads);
  std::sort(minimal.begin(), minimal.end(),
            [&](const Monomial& a, const Monomial& b) { return basis.order().less(a, b); });
  return minimal;
}

bool is_groebner_basis(const std::vector<Polynomial>& polys, const MonomialOrder& order) {
  const auto reducers = make_reducers(polys, order);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = i + 1; j < polys.size(); ++j) {
      if (coprime(reducers[i].lead, reducers[j].lead)) continue;
      if (!reduce(s_polynomial(polys[i], polys[j], order), reducers, order).is_zero()) return false;
    }
  return true;
}

}  // namespace bilip
