#include "report_json.hpp"

#include <cmath>

namespace bilip::cli {

namespace {

json polys(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

// Separations are infinite with fewer than two points.
json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

}  // namespace

json to_json(const ConeComponentReport& r) {
  return {{"polynomial", r.component_poly.to_string()},
          {"exponent", r.exponent},
          {"degree", r.component_degree},
          {"irreducibility", to_string(r.irreducibility_status)},
          {"may_split_over_c", r.may_split_over_c},
          {"complex_components", r.complex_components ? json(*r.complex_components) : json(nullptr)},
          {"sing_dim", r.sing_dim}};
}

json to_json(const InvariantSignature& sig, bool assume_radical) {
  json j{{"mode", to_string(sig.mode)},
         {"path", to_string(sig.path)},
         {"variables", sig.ambient_dim},
         {"dimension", sig.set_dim},
         {"total_degree", sig.total_degree},
         {"class_c1_infinity", to_string(sig.class_c1)},
         {"caveats", signature_caveats(sig, assume_radical)}};
  if (sig.path == Path::hypersurface) {
    json comps = json::array();
    for (const auto& c : sig.components) comps.push_back({{"degree", c.degree}, {"exponent", c.exponent}});
    json reports = json::array();
    for (const auto& r : sig.reports) reports.push_back(to_json(r));
    const auto check = verify_degree_formula(sig);
    j["component_count"] = sig.component_count;
    j["components_over_c"] = sig.components_over_c;
    j["components"] = comps;
    j["cone_components"] = reports;
    j["degree_formula"] = {{"holds", check.holds},
                           {"total_degree", check.total_degree},
                           {"component_sum", check.component_sum}};
  } else {
    j["cone_generators"] = polys(sig.cone_generators);
    j["cone_dimension"] = sig.cone_dim;
    j["cone_degree"] = sig.cone_degree;
  }
  return j;
}

json to_json(const ObstructionReport& r, bool assume_radical) {
  json just = json::array();
  for (const auto& j : r.justification)
    just.push_back({{"invariant", j.invariant},
                    {"tag", j.tag},
                    {"strength", to_string(j.strength)},
                    {"matched", j.matched},
                    {"detail", j.detail}});
  auto optional_bool = [](const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); };
  return {{"a", to_json(r.a, assume_radical)},
          {"b", to_json(r.b, assume_radical)},
          {"matched",
           {{"dimension", r.dimension_matched},
            {"total_degree", r.total_degree_matched},
            {"component_count", optional_bool(r.component_count_matched)},
            {"multiset", optional_bool(r.multiset_matched)}}},
          {"verdict", to_string(r.verdict)},
          {"justification", just},
          {"caveats", r.caveats}};
}

json to_json(const SheetReport& r) {
  return {{"component_index", r.component_index},
          {"component", r.component.to_string()},
          {"exponent", r.exponent},
          {"fiber_point_counts", r.fiber_point_counts},
          {"sheet_count", r.sheet_count},
          {"agrees", r.agrees}};
}

json to_json(const SheetRun& run) {
  json base = json::array();
  for (const auto& z : run.region.base_direction) base.push_back({z.real(), z.imag()});
  json matrix = json::array();
  for (const auto& row : run.projection.matrix) {
    json r = json::array();
    for (const auto& z : row) r.push_back({z.real(), z.imag()});
    matrix.push_back(r);
  }
  json comps = json::array();
  for (const auto& c : run.components) comps.push_back(to_json(c));
  return {{"region", {{"base_direction", base}, {"aperture", run.region.aperture}, {"radius", run.region.radius}}},
          {"projection", matrix},
          {"radii", run.radii},
          {"totals_per_rung", run.totals_per_rung},
          {"affine_degree", run.affine_degree},
          {"min_root_separation", finite_or_null(run.min_root_separation)},
          {"min_fiber_point_separation", finite_or_null(run.min_fiber_point_separation)},
          {"max_final_offset", run.max_final_offset},
          {"aperture_consistent", run.aperture_consistent},
          {"reseeds", run.reseeds},
          {"warnings", run.warnings},
          {"components", comps}};
}

json to_json(const AbelianGroup& g) {
  return {{"free_rank", g.free_rank}, {"torsion", g.torsion}, {"text", to_string(g)}};
}

json to_json(const SpectralPage& page) {
  json entries = json::array();
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 2; ++q) entries.push_back({{"p", p}, {"q", q}, {"group", to_json(page.at(p, q))}});
  return {{"index", page.index}, {"d2_multiplier", page.d2_multiplier}, {"entries", entries}};
}

}  // namespace bilip::cli
