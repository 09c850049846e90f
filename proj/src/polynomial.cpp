#include "bilip/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "bilip/errors.hpp"

namespace bilip {

Ring::Ring(std::vector<std::string> vars)
    : vars_(std::make_shared<const std::vector<std::string>>(std::move(vars))) {
  auto sorted = *vars_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DomainError("duplicate variable name in ring");
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  auto it = std::find(vars_->begin(), vars_->end(), name);
  if (it == vars_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_->begin());
}

Ring Ring::with_variable(const std::string& name) const {
  if (index_of(name)) throw DomainError("variable '" + name + "' already in ring");
  auto vars = *vars_;
  vars.push_back(name);
  return Ring(std::move(vars));
}

unsigned Degree::value() const {
  if (!value_) throw DomainError("degree of the zero polynomial");
  return *value_;
}

Polynomial::Polynomial(Ring ring, TermMap terms) : ring_(std::move(ring)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ring_.size()) throw DomainError("monomial length differs from ring size");
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(const Ring& ring, const Rational& c) {
  Polynomial p(ring);
  p.add_term(Monomial(ring.size()), c);
  return p;
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  Monomial m(ring.size());
  m[index] = 1;
  return term(ring, m, Rational(1));
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.degree() == d; });
}

Degree Polynomial::degree() const {
  if (terms_.empty()) return Degree::minus_infinity();
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return Degree(d);
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < ring_.size(); ++i)
    if (degree_in(i) > 0) vars.push_back(i);
  return vars;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.less(best->first, it->first)) best = it;
  return *best;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(ring_ == other.ring_)) throw RingMismatch();
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!(ring_ == other.ring_)) throw RingMismatch();
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.ring_ == b.ring_)) throw RingMismatch();
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::complex<double> Polynomial::evaluate(const std::vector<std::complex<double>>& point) const {
  std::complex<double> sum = 0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> v = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) v *= point[i];
    sum += v;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  const auto order = MonomialOrder::grevlex(ring_.size());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return order.less(b.first, a.first); });
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    const bool negative = c < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    const Rational magnitude = abs(c);
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_.name(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty())
      out << magnitude.get_str();
    else if (magnitude == 1)
      out << mono;
    else
      out << magnitude.get_str() << "*" << mono;
  }
  return out.str();
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (!(f.ring() == g.ring())) throw RingMismatch();
  if (g.is_zero()) throw DomainError("division by zero polynomial");
  // Lex order is the map's own order, so the leading term is the last entry.
  const auto& [glead, gcoef] = *g.terms().rbegin();
  Polynomial q(f.ring());
  Polynomial r = f;
  while (!r.is_zero()) {
    const auto& [rlead, rcoef] = *r.terms().rbegin();
    if (!glead.divides(rlead)) throw InexactDivision();
    const Monomial m = rlead / glead;
    const Rational c = rcoef / gcoef;
    q.add_term(m, c);
    for (const auto& [gm, gc] : g.terms()) r.add_term(gm * m, -c * gc);
  }
  return q;
}

Polynomial homogeneous_part(const Polynomial& f, unsigned degree) {
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms())
    if (m.degree() == degree) r.add_term(m, c);
  return r;
}

Polynomial top_form(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("top form of the zero polynomial");
  return homogeneous_part(f, f.degree().value());
}

Polynomial homogenize(const Polynomial& f, const std::string& t) {
  const Ring ring = f.ring().with_variable(t);
  Polynomial r(ring);
  if (f.is_zero()) return r;
  const unsigned d = f.degree().value();
  for (const auto& [m, c] : f.terms()) {
    auto exps = m.exponents();
    exps.push_back(d - m.degree());
    r.add_term(Monomial(std::move(exps)), c);
  }
  return r;
}

Polynomial specialize(const Polynomial& f, std::size_t var, const Rational& value) {
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    Monomial reduced = m;
    reduced[var] = 0;
    Rational factor = c;
    for (unsigned k = 0; k < m[var]; ++k) factor *= value;
    r.add_term(reduced, factor);
  }
  return r;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  Polynomial r(f.ring());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    Monomial reduced = m;
    reduced[var] -= 1;
    r.add_term(reduced, c * m[var]);
  }
  return r;
}

Polynomial change_ring(const Polynomial& f, const Ring& target) {
  std::vector<std::optional<std::size_t>> map(f.ring().size());
  for (std::size_t i = 0; i < f.ring().size(); ++i) map[i] = target.index_of(f.ring().name(i));
  Polynomial r(target);
  for (const auto& [m, c] : f.terms()) {
    Monomial out(target.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw DomainError("variable '" + f.ring().name(i) + "' missing from target ring");
      out[*map[i]] = m[i];
    }
    r.add_term(out, c);
  }
  return r;
}

Polynomial normalize(const Polynomial& f) {
  if (f.is_zero()) return f;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& [m, c] : f.terms()) {
    num_gcd = gcd(num_gcd, Integer(c.get_num()));
    den_lcm = lcm(den_lcm, Integer(c.get_den()));
  }
  Rational scale = make_rational(den_lcm, num_gcd);
  if (f.leading_term(MonomialOrder::grevlex(f.ring().size())).second < 0) scale = -scale;
  return f * scale;
}

Polynomial make_monic(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return f;
  return f * Rational(1 / f.leading_term(order).second);
}

Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& m) {
  const std::size_t n = f.ring().size();
  if (m.size() != n || inverse(m).empty()) throw DomainError("substitution matrix is singular or has wrong size");
  std::vector<std::vector<Polynomial>> powers(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial form(f.ring());
    for (std::size_t j = 0; j < n; ++j) {
      Monomial mono(n);
      mono[j] = 1;
      form.add_term(mono, m[i][j]);
    }
    powers[i].push_back(Polynomial::constant(f.ring(), Rational(1)));
    powers[i].push_back(form);
  }
  Polynomial r(f.ring());
  for (const auto& [mono, c] : f.terms()) {
    Polynomial t = Polynomial::constant(f.ring(), c);
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= mono[i]) powers[i].push_back(powers[i].back() * powers[i][1]);
      if (mono[i] > 0) t *= powers[i][mono[i]];
    }
    r += t;
  }
  return r;
}

}  // namespace bilip
