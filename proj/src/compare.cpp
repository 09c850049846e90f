#include "bilip/compare.hpp"

#include <algorithm>

#include "bilip/errors.hpp"

namespace bilip {

namespace {

std::string pair_text(std::uint64_t x, std::uint64_t y) { return std::to_string(x) + " vs " + std::to_string(y); }

std::string multiset_text(const std::vector<ComponentInvariant>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += "(" + std::to_string(v[i].degree) + "," + std::to_string(v[i].exponent) + ")";
  }
  return out + "}";
}

std::vector<unsigned> exponents(const InvariantSignature& s) {
  std::vector<unsigned> out;
  for (const auto& c : s.components) out.push_back(c.exponent);
  std::sort(out.begin(), out.end());
  return out;
}

std::string exponent_text(const std::vector<unsigned>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + "}";
}

}  // namespace

std::string to_string(Verdict v) {
  return v == Verdict::distinguished ? "distinguished" : "not-distinguished-by-these-invariants";
}

std::string to_string(Strength s) { return s == Strength::theorem ? "theorem" : "conjectural"; }

std::vector<std::string> signature_caveats(const InvariantSignature& sig, bool assume_radical) {
  std::vector<std::string> out;
  if (sig.path == Path::ideal) {
    if (assume_radical)
      out.push_back("ideal assumed radical: Hilbert degree taken as the degree of the set");
    else
      out.push_back("radicality not checked: the Hilbert degree is that of the ideal and exceeds the "
                    "degree of the set when the ideal is not radical");
    out.push_back("purity not checked: dimension is the largest component dimension and the degree "
                  "counts only top-dimensional components");
    out.push_back("cone components and relative multiplicities are computed for hypersurfaces only");
  } else if (!sig.components_over_c) {
    out.push_back("some cone component may split over C: component count and multiset are grouped over Q");
  }
  if (sig.mode == Mode::local_homogeneous)
    out.push_back("local mode: total degree is the multiplicity at the origin");
  return out;
}

ObstructionReport compare_signatures(const InvariantSignature& a, const InvariantSignature& b,
                                     const CompareOptions& options) {
  if (a.mode != b.mode) throw DomainError("signatures were computed in different modes");
  ObstructionReport r;
  r.a = a;
  r.b = b;
  for (const auto* s : {&a, &b})
    for (auto& c : signature_caveats(*s, options.assume_radical))
      if (std::find(r.caveats.begin(), r.caveats.end(), c) == r.caveats.end()) r.caveats.push_back(c);

  // Dimensions come from exact Hilbert series, so they are always certain.
  r.dimension_matched = a.set_dim == b.set_dim;
  r.justification.push_back({"dimension", "topological-dimension", Strength::theorem, r.dimension_matched,
                             pair_text(a.set_dim, b.set_dim)});

  r.total_degree_matched = a.total_degree == b.total_degree;
  {
    Justification j{"total-degree", "", Strength::conjectural, r.total_degree_matched,
                    pair_text(a.total_degree, b.total_degree)};
    const bool degrees_exact = options.assume_radical || (a.path == Path::hypersurface && b.path == Path::hypersurface);
    const int dim = std::max(a.set_dim, b.set_dim);
    if (!r.dimension_matched) {
      j.tag = "degree-of-equidimensional-sets";
    } else if (dim <= 1) {
      j.tag = "degree-of-curves";
      j.strength = Strength::theorem;
    } else if (dim == 2) {
      j.tag = "degree-of-surfaces";
      j.strength = Strength::theorem;
    } else if (a.path == Path::hypersurface && b.path == Path::hypersurface &&
               a.class_c1 == TriState::yes && b.class_c1 == TriState::yes) {
      j.tag = "degree-of-c1-hypersurfaces";
      j.strength = Strength::theorem;
    } else {
      j.tag = "degree-in-higher-dimension";
    }
    if (!degrees_exact) {
      j.strength = Strength::conjectural;
      j.detail += " (ideal degree, radicality not checked)";
    }
    r.justification.push_back(j);
  }

  if (a.path == Path::hypersurface && b.path == Path::hypersurface) {
    const bool over_c = a.components_over_c && b.components_over_c;
    const Strength certified = over_c ? Strength::theorem : Strength::conjectural;
    const std::string note = over_c ? "" : " (grouped over Q)";
    r.component_count_matched = a.component_count == b.component_count;
    r.justification.push_back({"component-count", "multiplicities-at-infinity", certified,
                               *r.component_count_matched,
                               pair_text(a.component_count, b.component_count) + note});
    const auto ea = exponents(a), eb = exponents(b);
    r.justification.push_back({"exponent-multiset", "multiplicities-at-infinity", certified, ea == eb,
                               exponent_text(ea) + " vs " + exponent_text(eb) + note});
    r.multiset_matched = a.components == b.components;
    const bool low_dim = std::max(a.set_dim, b.set_dim) <= 2;
    r.justification.push_back({"component-multiset",
                               low_dim ? "multiplicities-at-infinity" : "component-degrees-in-higher-dimension",
                               low_dim ? certified : Strength::conjectural, *r.multiset_matched,
                               multiset_text(a.components) + " vs " + multiset_text(b.components) + note});
  }

  r.verdict = std::any_of(r.justification.begin(), r.justification.end(),
                          [](const Justification& j) { return j.strength == Strength::theorem && !j.matched; })
                  ? Verdict::distinguished
                  : Verdict::not_distinguished;
  return r;
}

}  // namespace bilip
