#include "bilip/cone.hpp"

#include <algorithm>

#include "bilip/errors.hpp"
#include "bilip/factor.hpp"
#include "bilip/hilbert.hpp"
#include "bilip/poly_algorithms.hpp"

namespace bilip {

namespace {

GroebnerBasis nonunit_basis(const Ideal& ideal) {
  auto basis = buchberger(ideal, MonomialOrder::grevlex(ideal.ring().size()));
  if (basis.is_unit()) throw DomainError("ideal defines the empty set");
  return basis;
}

void fill_hypersurface(InvariantSignature& sig, const Polynomial& f) {
  const Ideal principal(f.ring(), {f});
  const HilbertData data = affine_degree(principal);
  sig.path = Path::hypersurface;
  sig.set_dim = static_cast<int>(data.krull_dimension);
  sig.total_degree = sig.mode == Mode::local_homogeneous ? multiplicity_homogeneous_germ(principal)
                                                          : data.degree;
  sig.reports = cone_components_hypersurface(f);

  sig.components_over_c = std::all_of(sig.reports.begin(), sig.reports.end(), [](const auto& r) {
    return r.complex_components.has_value() &&
           r.irreducibility_status == IrreducibilityStatus::verified_q_irreducible;
  });
  for (const auto& r : sig.reports) {
    if (sig.components_over_c) {
      const unsigned pieces = *r.complex_components;
      for (unsigned k = 0; k < pieces; ++k)
        sig.components.push_back({r.component_degree / pieces, r.exponent});
    } else {
      sig.components.push_back({r.component_degree, r.exponent});
    }
  }
  std::sort(sig.components.begin(), sig.components.end());
  sig.component_count = static_cast<unsigned>(sig.components.size());

  bool all_small = true, certified_large = false;
  for (const auto& r : sig.reports) {
    if (r.sing_dim <= 1) continue;
    all_small = false;
    if (r.complex_components == 1u) certified_large = true;
  }
  sig.class_c1 = all_small ? TriState::yes : certified_large ? TriState::no : TriState::unknown;
}

}  // namespace

std::string to_string(IrreducibilityStatus s) {
  return s == IrreducibilityStatus::verified_q_irreducible ? "verified-Q-irreducible"
                                                           : "squarefree-unverified";
}

std::string to_string(Mode m) { return m == Mode::at_infinity ? "at-infinity" : "local-homogeneous"; }

std::string to_string(Path p) { return p == Path::hypersurface ? "hypersurface" : "ideal"; }

std::string to_string(TriState t) {
  switch (t) {
    case TriState::yes:
      return "true";
    case TriState::no:
      return "false";
    default:
      return "unknown";
  }
}

InfinityIdeal infinity_ideal(const Ideal& ideal) {
  const auto basis = nonunit_basis(ideal);
  InfinityIdeal out{ideal.ring(), {}};
  for (const auto& g : basis.elements()) out.generators.push_back(normalize(top_form(g)));
  return out;
}

int sing_dim(const Polynomial& h) {
  if (h.is_constant()) throw DomainError("sing_dim needs a nonconstant polynomial");
  if (!h.is_homogeneous()) throw DomainError("sing_dim needs a homogeneous polynomial");
  std::vector<Polynomial> gens{h};
  for (std::size_t i = 0; i < h.ring().size(); ++i) {
    Polynomial d = derivative(h, i);
    if (d.is_zero()) continue;
    if (d.is_constant()) return -1;  // the gradient never vanishes
    gens.push_back(std::move(d));
  }
  return static_cast<int>(dim_degree_homogeneous(Ideal(h.ring(), gens)).krull_dimension);
}

std::vector<ConeComponentReport> cone_components_hypersurface(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("cone components need a nonconstant polynomial");
  const std::size_t n = f.ring().size();
  const Polynomial top = top_form(squarefree_part(f));
  std::vector<ConeComponentReport> out;
  for (const auto& [h, e] : squarefree_decomposition(top)) {
    for (const auto& part : factor_form(h)) {
      ConeComponentReport r;
      r.component_poly = part.factor;
      r.exponent = e;
      r.component_degree = part.factor.degree().value();
      r.irreducibility_status = part.verified ? IrreducibilityStatus::verified_q_irreducible
                                              : IrreducibilityStatus::squarefree_unverified;
      r.sing_dim = sing_dim(part.factor);
      if (n <= 2) {
        // A squarefree binary form is a union of distinct lines.
        r.complex_components = r.component_degree;
        r.may_split_over_c = r.component_degree > 1;
      } else if (r.component_degree == 1 ||
                 (part.verified && r.sing_dim < static_cast<int>(n) - 2)) {
        // Conjugate components would meet in codimension one inside the
        // singular locus, so a small singular locus rules them out.
        r.complex_components = 1;
      } else {
        r.may_split_over_c = true;
      }
      out.push_back(std::move(r));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.component_degree != b.component_degree) return a.component_degree < b.component_degree;
    return a.exponent < b.exponent;
  });
  return out;
}

InvariantSignature invariant_signature(const Ideal& ideal, Mode mode) {
  if (mode == Mode::local_homogeneous && !ideal.is_homogeneous())
    throw DomainError("local-homogeneous mode needs homogeneous generators");
  const auto basis = nonunit_basis(ideal);
  InvariantSignature sig;
  sig.mode = mode;
  sig.ambient_dim = ideal.ring().size();
  if (basis.elements().size() == 1) {
    fill_hypersurface(sig, basis.elements().front());
    return sig;
  }
  sig.path = Path::ideal;
  const HilbertData data = affine_degree(ideal);
  sig.set_dim = static_cast<int>(data.krull_dimension);
  sig.total_degree = mode == Mode::local_homogeneous ? multiplicity_homogeneous_germ(ideal) : data.degree;
  sig.cone_generators = infinity_ideal(ideal).generators;
  const HilbertData cone = dim_degree_homogeneous(Ideal(ideal.ring(), sig.cone_generators));
  sig.cone_dim = static_cast<int>(cone.krull_dimension);
  sig.cone_degree = cone.degree;
  sig.class_c1 = TriState::unknown;
  return sig;
}

InvariantSignature invariant_signature(const Polynomial& f, Mode mode) {
  return invariant_signature(Ideal(f.ring(), {f}), mode);
}

bool same_invariants(const InvariantSignature& a, const InvariantSignature& b) {
  return a.mode == b.mode && a.path == b.path && a.ambient_dim == b.ambient_dim &&
         a.set_dim == b.set_dim && a.total_degree == b.total_degree &&
         a.component_count == b.component_count && a.components == b.components &&
         a.components_over_c == b.components_over_c && a.class_c1 == b.class_c1 &&
         a.cone_dim == b.cone_dim && a.cone_degree == b.cone_degree;
}

DegreeFormulaCheck verify_degree_formula(const InvariantSignature& sig) {
  if (sig.path != Path::hypersurface) throw DomainError("degree formula needs component data");
  DegreeFormulaCheck out;
  out.total_degree = sig.total_degree;
  for (const auto& r : sig.reports) out.component_sum += std::uint64_t{r.exponent} * r.component_degree;
  out.holds = out.total_degree == out.component_sum;
  return out;
}

}  // namespace bilip
