#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bilip/compare.hpp"
#include "bilip/errors.hpp"
#include "bilip/hilbert.hpp"
#include "bilip/numeric.hpp"
#include "bilip/parse.hpp"
#include "bilip/topology.hpp"
#include "report_json.hpp"

using namespace bilip;
using namespace bilip::cli;

namespace {

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  double tolerance = 1e-6;
  bool assume_radical = false;
};

// A path to an existing file, otherwise the input text itself.
ParsedInput load(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    if (!in) throw DomainError("cannot read " + arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_input(buffer.str());
  }
  return parse_input(arg);
}

Ideal load_ideal(const std::string& arg) {
  auto parsed = load(arg);
  if (parsed.polynomials.empty()) throw DomainError("input contains no polynomial");
  return Ideal(parsed.ring, parsed.polynomials);
}

Polynomial load_hypersurface(const std::string& arg) {
  const Ideal ideal = load_ideal(arg);
  const auto basis = buchberger(ideal, MonomialOrder::grevlex(ideal.ring().size()));
  if (basis.is_unit()) throw DomainError("ideal defines the empty set");
  if (basis.elements().size() != 1) throw DomainError("input is not a hypersurface");
  return basis.elements().front();
}

Mode parse_mode(const std::string& s) {
  if (s == "at-infinity") return Mode::at_infinity;
  if (s == "local-homogeneous") return Mode::local_homogeneous;
  throw DomainError("unknown mode " + s);
}

InvariantSignature checked_signature(const Ideal& ideal, Mode mode) {
  auto sig = invariant_signature(ideal, mode);
  if (sig.path == Path::hypersurface && !verify_degree_formula(sig).holds)
    throw InternalError("degree does not equal the weighted sum of cone component degrees");
  return sig;
}

std::string components_text(const std::vector<ComponentInvariant>& cs) {
  std::string out;
  for (const auto& c : cs) out += (out.empty() ? "" : ", ") + std::string("(") + std::to_string(c.degree) + "," +
                                  std::to_string(c.exponent) + ")";
  return "{" + out + "}";
}

void print_signature(std::ostream& os, const InvariantSignature& sig, bool assume_radical) {
  os << "mode: " << to_string(sig.mode) << "\n"
     << "path: " << to_string(sig.path) << "\n"
     << "dimension: " << sig.set_dim << "\n"
     << (sig.mode == Mode::at_infinity ? "degree: " : "multiplicity: ") << sig.total_degree << "\n";
  if (sig.path == Path::hypersurface) {
    os << "cone components (r = " << sig.component_count << (sig.components_over_c ? ", over C" : ", over Q")
       << "): " << components_text(sig.components) << "\n";
    for (const auto& r : sig.reports) {
      os << "  " << r.component_poly.to_string() << "  degree " << r.component_degree << "  k " << r.exponent
         << "  sing_dim " << r.sing_dim << "  " << to_string(r.irreducibility_status);
      if (r.may_split_over_c) os << "  may split over C";
      os << "\n";
    }
    const auto check = verify_degree_formula(sig);
    os << "degree formula: " << check.total_degree << " = " << check.component_sum
       << (check.holds ? " (ok)" : " (FAILED)") << "\n";
  } else {
    os << "cone: dimension " << sig.cone_dim << ", degree " << sig.cone_degree << "\n";
    for (const auto& g : sig.cone_generators) os << "  " << g.to_string() << "\n";
  }
  os << "class C1 at infinity: " << to_string(sig.class_c1) << "\n";
  for (const auto& c : signature_caveats(sig, assume_radical)) os << "caveat: " << c << "\n";
}

int run_invariants(const Globals& g, const std::string& input, const std::string& mode) {
  const auto sig = checked_signature(load_ideal(input), parse_mode(mode));
  if (g.json)
    std::cout << to_json(sig, g.assume_radical).dump(2) << "\n";
  else
    print_signature(std::cout, sig, g.assume_radical);
  return 0;
}

int run_cone(const Globals& g, const std::string& input) {
  const Ideal ideal = load_ideal(input);
  const auto cone = infinity_ideal(ideal);
  const auto data = dim_degree_homogeneous(Ideal(cone.ring, cone.generators));
  std::vector<ConeComponentReport> reports;
  if (cone.generators.size() == 1) reports = cone_components_hypersurface(load_hypersurface(input));
  if (g.json) {
    json out{{"generators", json::array()}, {"dimension", data.krull_dimension}, {"degree", data.degree}};
    for (const auto& p : cone.generators) out["generators"].push_back(p.to_string());
    if (cone.generators.size() == 1) {
      out["components"] = json::array();
      for (const auto& r : reports) out["components"].push_back(to_json(r));
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "cone at infinity: dimension " << data.krull_dimension << ", degree " << data.degree << "\n";
  for (const auto& p : cone.generators) std::cout << "  " << p.to_string() << "\n";
  for (const auto& r : reports)
    std::cout << "component " << r.component_poly.to_string() << "  degree " << r.component_degree << "  k "
              << r.exponent << "\n";
  return 0;
}

int run_compare(const Globals& g, const std::string& a, const std::string& b, const std::string& mode) {
  const Mode m = parse_mode(mode);
  const auto report = compare_signatures(checked_signature(load_ideal(a), m), checked_signature(load_ideal(b), m),
                                         CompareOptions{g.assume_radical});
  if (g.json) {
    std::cout << to_json(report, g.assume_radical).dump(2) << "\n";
    return 0;
  }
  std::cout << "verdict: " << to_string(report.verdict) << "\n";
  for (const auto& j : report.justification)
    std::cout << "  " << (j.matched ? "match    " : "MISMATCH ") << j.invariant << ": " << j.detail << "  [" << j.tag
              << ", " << to_string(j.strength) << "]\n";
  for (const auto& c : report.caveats) std::cout << "caveat: " << c << "\n";
  if (report.verdict == Verdict::not_distinguished)
    std::cout << "note: not distinguished is not a certificate of equivalence\n";
  return 0;
}

int run_sheets(const Globals& g, const std::string& input, std::optional<std::size_t> component, double eta,
               std::optional<double> radius, unsigned ladder) {
  const Polynomial f = load_hypersurface(input);
  SheetParams params;
  params.eta = eta;
  params.radius = radius;
  params.ladder = ladder;
  params.seed = g.seed;
  params.cluster_tolerance = g.tolerance;
  SheetRun run = sheet_counts(f, params);
  if (component) {
    if (*component >= run.components.size())
      throw DomainError("component index " + std::to_string(*component) + " out of range");
    run.components = {run.components[*component]};
  }
  if (g.json) {
    std::cout << to_json(run).dump(2) << "\n";
    return 0;
  }
  std::cout << "affine degree: " << run.affine_degree << "\n";
  for (const auto& c : run.components)
    std::cout << "component " << c.component_index << " " << c.component.to_string() << ": sheets " << c.sheet_count
              << ", exponent " << c.exponent << (c.agrees ? " (agrees)" : " (DISAGREES)") << "\n";
  for (const auto& w : run.warnings) std::cout << "warning: " << w << "\n";
  return 0;
}

int run_topology(const Globals& g, std::optional<std::int64_t> b1, std::optional<std::int64_t> degree,
                 std::optional<std::int64_t> smooth) {
  if (smooth) {
    if (b1 || degree) throw DomainError("--smooth-plane-degree excludes --b1 and --degree");
    b1 = static_cast<std::int64_t>(plane_curve_b1(*smooth));
    degree = smooth;
  }
  if (!b1 || !degree) throw DomainError("give --b1 and --degree, or --smooth-plane-degree");
  const auto pages = leray_pages(*b1, *degree);
  const auto h2 = h2_of_complement(*b1, *degree);
  const auto recovered = degree_from_h2(h2);
  if (recovered != static_cast<std::uint64_t>(*degree)) throw InternalError("torsion does not recover the degree");
  if (g.json) {
    std::cout << json{{"b1", *b1},
                      {"degree", *degree},
                      {"e2", to_json(pages.e2)},
                      {"e_infinity", to_json(pages.e_infinity)},
                      {"h2", to_json(h2)},
                      {"recovered_degree", recovered}}
                     .dump(2)
              << "\n";
    return 0;
  }
  for (const auto* page : {&pages.e2, &pages.e_infinity}) {
    std::cout << (page->index == 2 ? "E2" : "E_infinity") << ":\n";
    for (int q = 1; q >= 0; --q) {
      std::cout << "  q=" << q;
      for (int p = 0; p < 3; ++p) std::cout << "  " << to_string(page->at(p, q));
      std::cout << "\n";
    }
  }
  std::cout << "d2 = multiplication by " << pages.e2.d2_multiplier << "\n"
            << "H2 = " << to_string(h2) << "\n"
            << "degree = " << recovered << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-Lipschitz invariants at infinity of complex algebraic sets"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "Print JSON");
  app.add_option("--seed", g.seed, "Seed for the numeric sheet count");
  app.add_option("--tolerance", g.tolerance, "Cluster tolerance for the numeric sheet count")
      ->check(CLI::PositiveNumber);
  app.add_flag("--assume-radical", g.assume_radical, "Treat ideal inputs as radical");

  std::string input, other, mode = "at-infinity";
  auto* invariants = app.add_subcommand("invariants", "Degree, cone components and multiplicities at infinity");
  invariants->add_option("input", input, "File or inline polynomials separated by ';'")->required();
  invariants->add_option("--mode", mode, "at-infinity or local-homogeneous")
      ->check(CLI::IsMember({"at-infinity", "local-homogeneous"}));

  auto* cone = app.add_subcommand("cone", "Tangent cone at infinity");
  cone->add_option("input", input, "File or inline polynomials")->required();

  auto* compare = app.add_subcommand("compare", "Search for an obstruction to bi-Lipschitz equivalence");
  compare->add_option("a", input, "First set")->required();
  compare->add_option("b", other, "Second set")->required();
  compare->add_option("--mode", mode, "at-infinity or local-homogeneous")
      ->check(CLI::IsMember({"at-infinity", "local-homogeneous"}));

  std::optional<std::size_t> component;
  double eta = 0.1;
  std::optional<double> radius;
  unsigned ladder = 10;
  auto* sheets = app.add_subcommand("sheets", "Count sheets of a generic projection over each cone component");
  sheets->add_option("input", input, "File or inline polynomial")->required();
  sheets->add_option("--component", component, "Report only this component index");
  sheets->add_option("--eta", eta, "Aperture of the cone region")->check(CLI::Range(0.0, 1.0));
  sheets->add_option("--radius", radius, "Inner radius of the cone region")->check(CLI::PositiveNumber);
  sheets->add_option("--ladder", ladder, "Number of radius doublings")->check(CLI::Range(1u, 60u));
  sheets->add_option("--seed", g.seed, "Seed for the random frame");

  std::optional<std::int64_t> b1, degree, smooth;
  auto* topology = app.add_subcommand("topology", "Second cohomology of a punctured homogeneous surface");
  topology->add_option("--b1", b1, "First Betti number of the projectivized curve");
  topology->add_option("--degree", degree, "Degree of the surface");
  topology->add_option("--smooth-plane-degree", smooth, "Degree of a cone over a smooth plane curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*invariants) return run_invariants(g, input, mode);
    if (*cone) return run_cone(g, input);
    if (*compare) return run_compare(g, input, other, mode);
    if (*sheets) return run_sheets(g, input, component, eta, radius, ladder);
    if (*topology) return run_topology(g, b1, degree, smooth);
  } catch (const ComputationFailure& e) {
    std::cerr << "computation failed: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}
