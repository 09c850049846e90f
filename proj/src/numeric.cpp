#include "bilip/numeric.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <tuple>

#include "bilip/errors.hpp"
#include "bilip/hilbert.hpp"
#include "bilip/poly_algorithms.hpp"

namespace bilip {

namespace {

using Poly = CVector;  // ascending coefficients in s

// Thrown when a random configuration turns out to be degenerate.
struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Poly mul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, Complex(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Complex horner(const Poly& p, Complex s) {
  Complex v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * s + p[i];
  return v;
}

double norm(const CVector& v) {
  double s = 0;
  for (const auto& c : v) s += std::norm(c);
  return std::sqrt(s);
}

CVector normalized(CVector v) {
  const double n = norm(v);
  for (auto& c : v) c /= n;
  return v;
}

Complex random_complex(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const double re = normal(rng);
  return {re, normal(rng)};
}

// g(point + s * dir) as a polynomial in s.
Poly restrict_to_line(const Polynomial& g, const CVector& point, const CVector& dir) {
  const std::size_t n = g.ring().size();
  std::vector<std::vector<Poly>> powers(n, std::vector<Poly>{Poly{Complex(1)}});
  Poly out(1, Complex(0));
  for (const auto& [m, c] : g.terms()) {
    Poly t{Complex(c.get_d())};
    for (std::size_t i = 0; i < n; ++i) {
      while (powers[i].size() <= m[i]) powers[i].push_back(mul(powers[i].back(), Poly{point[i], dir[i]}));
      if (m[i]) t = mul(t, powers[i][m[i]]);
    }
    if (out.size() < t.size()) out.resize(t.size(), Complex(0));
    for (std::size_t k = 0; k < t.size(); ++k) out[k] += t[k];
  }
  return out;
}

double coefficient_scale(const Polynomial& g) {
  double s = 0;
  for (const auto& [m, c] : g.terms()) s += std::abs(c.get_d());
  return s;
}

// Random basis B (n x (n-1)) and kernel direction w with [B w] invertible.
struct Frame {
  Eigen::MatrixXcd basis;
  Eigen::VectorXcd kernel;
  Eigen::MatrixXcd projection;  // first n-1 rows of [B w]^-1
};

Frame draw_frame(std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Eigen::MatrixXcd m(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) m(i, j) = random_complex(rng);
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
    if (lu.rank() < static_cast<Eigen::Index>(n) || lu.rcond() < 1e-6) continue;
    const Eigen::MatrixXcd inv = lu.inverse();
    return {m.leftCols(n - 1), m.col(n - 1), inv.topRows(n - 1)};
  }
}

CVector to_cvector(const Eigen::VectorXcd& v) { return CVector(v.data(), v.data() + v.size()); }

CMatrix to_cmatrix(const Eigen::MatrixXcd& m) {
  CMatrix out(m.rows(), CVector(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

CVector random_unit(std::size_t k, std::mt19937_64& rng) {
  CVector v(k);
  for (auto& c : v) c = random_complex(rng);
  return normalized(v);
}

// Fiber of V(f) over t * v' along the kernel line, in the scaled coordinate s
// (points t * (b + s w)).
struct Fiber {
  std::vector<Poly> parts;  // parts[k] = f_k(b + s w)
  unsigned degree = 0;

  Fiber(const Polynomial& f, const CVector& b, const CVector& w) : degree(f.degree().value()) {
    for (unsigned k = 0; k <= degree; ++k) parts.push_back(restrict_to_line(homogeneous_part(f, k), b, w));
  }

  std::vector<Complex> roots(double t) const {
    Poly p(degree + 1, Complex(0));
    for (unsigned k = 0; k <= degree; ++k) {
      const double scale = std::pow(t, static_cast<double>(k) - degree);
      for (std::size_t i = 0; i < parts[k].size(); ++i) p[i] += scale * parts[k][i];
    }
    return polynomial_roots(p);
  }
};

double min_separation(const std::vector<Complex>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, std::abs(pts[i] - pts[j]));
  return best;
}

// Labels of roots that may be exchanged freely during matching (roots heading
// for the same cone fiber point).
using Labeler = std::function<std::vector<std::size_t>(const std::vector<Complex>&)>;

struct Match {
  std::vector<std::size_t> perm;
  // Pairs of a-indices whose continuations were interchangeable.
  std::vector<std::pair<std::size_t, std::size_t>> ties;
};

// Nearest-neighbor bijection a -> b. A root whose nearest candidates are not
// clearly separated is accepted only when they form an isolated group that
// shares one label (or, without labels, any isolated group; the tie is then
// reported).
std::optional<Match> match_roots(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                 const Labeler* labeler) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  const std::vector<std::size_t> labels = labeler ? (*labeler)(b) : std::vector<std::size_t>{};
  std::vector<std::vector<std::size_t>> allowed(n);
  std::vector<std::tuple<double, std::size_t, std::size_t>> candidates;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = std::abs(a[i] - b[j]);
    const std::size_t j1 = std::min_element(d.begin(), d.end()) - d.begin();
    const double d1 = d[j1];
    double outside = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (d[j] <= 2 * d1) {
        allowed[i].push_back(j);
        continue;
      }
      outside = std::min(outside, d[j]);
    }
    if (allowed[i].size() > 1 && labeler) {
      // Any root with the same label that is clearly closer than every
      // differently labelled root is an acceptable continuation.
      double other = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < n; ++j)
        if (labels[j] != labels[j1]) other = std::min(other, d[j]);
      if (d1 >= 0.5 * other) return std::nullopt;
      allowed[i].clear();
      for (std::size_t j = 0; j < n; ++j)
        if (labels[j] == labels[j1] && d[j] < 0.5 * other) allowed[i].push_back(j);
    } else if (allowed[i].size() > 1 && outside <= 4 * d1) {
      return std::nullopt;
    }
    for (std::size_t j : allowed[i]) candidates.emplace_back(d[j], i, j);
  }
  std::sort(candidates.begin(), candidates.end());
  Match m;
  m.perm.assign(n, n);
  std::vector<bool> used(n, false);
  for (const auto& [dist, i, j] : candidates) {
    if (m.perm[i] != n || used[j]) continue;
    m.perm[i] = j;
    used[j] = true;
  }
  if (std::find(m.perm.begin(), m.perm.end(), n) != m.perm.end()) return std::nullopt;
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[m.perm[i]] = i;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : allowed[i])
      if (j != m.perm[i]) m.ties.emplace_back(i, owner[j]);
  return m;
}

// Roots at tb ordered to continue the tracks a at ta, refining the step
// geometrically when the nearest-neighbor match is ambiguous.
std::optional<std::vector<Complex>> continue_tracks(const Fiber& fiber, const std::vector<Complex>& a,
                                                    double ta, double tb, int depth,
                                                    const Labeler* labeler, unsigned& refinements,
                                                    std::vector<std::pair<std::size_t, std::size_t>>& ties) {
  const auto rb = fiber.roots(tb);
  if (auto m = match_roots(a, rb, labeler)) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = rb[m->perm[i]];
    ties.insert(ties.end(), m->ties.begin(), m->ties.end());
    return out;
  }
  if (depth == 0) return std::nullopt;
  ++refinements;
  const double tm = std::sqrt(ta * tb);
  const auto mid = continue_tracks(fiber, a, ta, tm, depth - 1, labeler, refinements, ties);
  if (!mid) return std::nullopt;
  return continue_tracks(fiber, *mid, tm, tb, depth - 1, labeler, refinements, ties);
}

struct Ladder {
  std::vector<std::vector<Complex>> tracks;  // tracks[j][k]: track k at rung j
  std::vector<std::pair<std::size_t, std::size_t>> ties;
  double min_separation = 0;
  unsigned refinements = 0;
};

Ladder track_ladder(const Fiber& fiber, const std::vector<double>& radii, double separation_floor,
                    const Labeler* labeler) {
  // Separations are measured between the actual points t * (b + s w).
  Ladder out;
  out.tracks.push_back(fiber.roots(radii.front()));
  out.min_separation = radii.front() * min_separation(out.tracks.back());
  for (std::size_t j = 1; j < radii.size(); ++j) {
    auto next = continue_tracks(fiber, out.tracks.back(), radii[j - 1], radii[j], 6, labeler,
                                out.refinements, out.ties);
    if (!next) throw Degenerate("tracks could not be matched between rungs");
    out.min_separation = std::min(out.min_separation, radii[j] * min_separation(*next));
    out.tracks.push_back(std::move(*next));
  }
  if (out.min_separation < separation_floor) throw Degenerate("two sheets closer than the cluster tolerance");
  return out;
}

struct FiberPoint {
  Complex s;
  std::size_t component;
};

// Cone fiber points over b along w, one set per component.
std::vector<FiberPoint> cone_fiber_points(const std::vector<ConeComponentReport>& reports,
                                          const CVector& b, const CVector& w) {
  std::vector<FiberPoint> out;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const Polynomial& h = reports[i].component_poly;
    Poly p = restrict_to_line(h, b, w);
    const double lead = std::abs(h.evaluate(w));
    if (lead < 1e-8 * coefficient_scale(h) * std::pow(norm(w), h.degree().value()))
      throw Degenerate("kernel direction too close to the cone");
    p.resize(h.degree().value() + 1);
    for (const auto& r : polynomial_roots(p)) out.push_back({r, i});
  }
  return out;
}

// Nearest fiber point per root; with strict set, ambiguous assignments throw.
std::vector<std::size_t> assign(const std::vector<Complex>& roots, const std::vector<FiberPoint>& pts,
                                bool strict, double* max_offset = nullptr) {
  std::vector<std::size_t> out;
  for (const auto& r : roots) {
    double d1 = std::numeric_limits<double>::infinity(), d2 = d1;
    std::size_t j1 = 0;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double d = std::abs(r - pts[j].s);
      if (d < d1) {
        d2 = d1;
        d1 = d;
        j1 = j;
      } else if (d < d2) {
        d2 = d;
      }
    }
    if (strict && pts.size() > 1 && d1 >= 0.5 * d2)
      throw Degenerate("sheets not separated at the last rung");
    if (max_offset) *max_offset = std::max(*max_offset, d1);
    out.push_back(j1);
  }
  return out;
}

std::vector<unsigned> count_per_point(const std::vector<std::size_t>& assignment, std::size_t npoints) {
  std::vector<unsigned> counts(npoints, 0);
  for (std::size_t j : assignment) ++counts[j];
  return counts;
}

// Sheet count per component; throws when fiber points of one component disagree.
std::vector<unsigned> per_component(const std::vector<unsigned>& counts,
                                    const std::vector<FiberPoint>& pts, std::size_t ncomponents,
                                    std::vector<std::vector<unsigned>>* detail = nullptr) {
  std::vector<std::vector<unsigned>> by_comp(ncomponents);
  for (std::size_t j = 0; j < pts.size(); ++j) by_comp[pts[j].component].push_back(counts[j]);
  std::vector<unsigned> out;
  for (const auto& c : by_comp) {
    if (c.empty() || std::adjacent_find(c.begin(), c.end(), std::not_equal_to<>()) != c.end())
      throw Degenerate("fiber points of one component carry different sheet counts");
    out.push_back(c.front());
  }
  if (detail) *detail = std::move(by_comp);
  return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  std::uint64_t out;
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  out = (std::uint64_t{words[0]} << 32) | words[1];
  return out;
}

void check_hypersurface(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) throw DomainError("a nonconstant polynomial is required");
  if (f.ring().size() < 2) throw DomainError("at least two variables are required");
}

}  // namespace

std::vector<Complex> polynomial_roots(const CVector& input) {
  CVector p = input;
  while (!p.empty() && p.back() == Complex(0)) p.pop_back();
  if (p.empty()) throw DomainError("zero polynomial has no finite root set");
  const std::size_t d = p.size() - 1;
  if (d == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(d, d);
  for (std::size_t i = 1; i < d; ++i) companion(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) companion(i, d - 1) = -p[i] / p[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots(solver.eigenvalues().data(), solver.eigenvalues().data() + d);

  Poly dp(d);
  for (std::size_t i = 1; i <= d; ++i) dp[i - 1] = p[i] * static_cast<double>(i);
  for (std::size_t k = 0; k < d; ++k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < d; ++j)
      if (j != k) nearest = std::min(nearest, std::abs(roots[j] - roots[k]));
    for (int iter = 0; iter < 4; ++iter) {
      const Complex der = horner(dp, roots[k]);
      if (der == Complex(0)) break;
      const Complex step = horner(p, roots[k]) / der;
      if (!(std::abs(step) < 0.1 * nearest)) break;
      roots[k] -= step;
      if (std::abs(step) <= 1e-15 * (1 + std::abs(roots[k]))) break;
    }
  }
  return roots;
}

bool ConeRegion::contains(const CVector& w) const {
  Complex inner = 0;
  for (std::size_t i = 0; i < w.size(); ++i) inner += std::conj(base_direction[i]) * w[i];
  const double a = inner.real();
  const double wn = norm(w);
  return wn > radius && a > 0 && a * a >= (1 - aperture * aperture) * wn * wn;
}

std::vector<LimitDirection> limit_directions(const Polynomial& f, const std::vector<double>& radii,
                                             unsigned samples, std::uint64_t seed) {
  check_hypersurface(f);
  if (radii.size() < 2) throw DomainError("at least two radii are required");
  for (std::size_t i = 0; i < radii.size(); ++i)
    if (!(radii[i] > 0) || (i > 0 && radii[i] <= radii[i - 1]))
      throw DomainError("radii must be positive and increasing");
  const Polynomial reduced = squarefree_part(f);
  const Polynomial top = top_form(reduced);
  const Polynomial cone = squarefree_part(top);
  const unsigned d = reduced.degree().value();
  const std::size_t n = f.ring().size();
  constexpr int kMaxAttempts = 6;

  std::vector<LimitDirection> out;
  for (unsigned sample = 0; sample < samples; ++sample) {
    std::string last_reason;
    bool done = false;
    for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
      std::mt19937_64 rng(mix_seed(seed, sample, attempt));
      try {
        const Frame frame = draw_frame(n, rng);
        const CVector w = to_cvector(frame.kernel);
        const CVector b = to_cvector(frame.basis * Eigen::Map<const Eigen::VectorXcd>(
                                                       random_unit(n - 1, rng).data(), n - 1));
        if (std::abs(top.evaluate(w)) < 1e-8 * coefficient_scale(top) * std::pow(norm(w), d))
          throw Degenerate("kernel direction too close to the cone");
        // Limits lie on the cone; its points over b label the tracks.
        Poly cone_line = restrict_to_line(cone, b, w);
        cone_line.resize(cone.degree().value() + 1);
        std::vector<FiberPoint> points;
        for (const auto& r : polynomial_roots(cone_line)) points.push_back({r, 0});
        std::vector<Complex> locations;
        for (const auto& p : points) locations.push_back(p.s);
        if (min_separation(locations) < 1e-3) throw Degenerate("cone fiber points nearly coincide");
        const Labeler nearest_point = [&](const std::vector<Complex>& roots) {
          return assign(roots, points, false);
        };
        const Fiber fiber(reduced, b, w);
        const Ladder ladder = track_ladder(fiber, radii, 1e-6, &nearest_point);
        const auto& tracks = ladder.tracks;

        // Tracks converging to the same point approach each other like a
        // negative fractional power of the radius; others stay apart.
        const auto& low = tracks.front();
        const auto& high = tracks.back();
        const double threshold = std::pow(radii.front() / radii.back(), 1.0 / (2.0 * d));
        std::vector<std::size_t> parent(d);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
          return parent[i] == i ? i : parent[i] = find(parent[i]);
        };
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = i + 1; j < d; ++j) {
            const double dh = std::abs(high[i] - high[j]);
            const double dl = std::abs(low[i] - low[j]);
            if (dh < 1e-9 || dh < threshold * dl) parent[find(i)] = find(j);
          }
        // Tracks exchanged during matching share a limit.
        for (const auto& [i, j] : ladder.ties) parent[find(i)] = find(j);
        const auto labels = assign(high, points, true);
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = i + 1; j < d; ++j)
            if (labels[i] == labels[j]) parent[find(i)] = find(j);
        const auto& prev = tracks[tracks.size() - 2];
        const double t1 = radii.back(), t0 = radii[radii.size() - 2];
        std::vector<std::pair<Complex, unsigned>> centers;
        std::vector<double> spreads;
        for (std::size_t root = 0; root < d; ++root) {
          if (find(root) != root) continue;
          Complex c1 = 0, c0 = 0;
          unsigned size = 0;
          for (std::size_t i = 0; i < d; ++i)
            if (find(i) == root) {
              c1 += high[i];
              c0 += prev[i];
              ++size;
            }
          c1 /= size;
          c0 /= size;
          // The centroid moves like s + a/t; eliminate the 1/t term.
          centers.emplace_back((t1 * c1 - t0 * c0) / (t1 - t0), size);
          spreads.push_back(0);
          for (std::size_t i = 0; i < d; ++i)
            if (find(i) == root) spreads.back() = std::max(spreads.back(), std::abs(high[i] - c1));
        }
        for (std::size_t i = 0; i < centers.size(); ++i)
          for (std::size_t j = 0; j < centers.size(); ++j)
            if (i != j && spreads[i] >= 0.5 * std::abs(centers[i].first - centers[j].first))
              throw Degenerate("direction clusters overlap");
        for (std::size_t i = 0; i < centers.size(); ++i)
          for (std::size_t j = i + 1; j < centers.size(); ++j)
            if (std::abs(centers[i].first - centers[j].first) < 1e-5)
              throw Degenerate("direction clusters closer than ten times the tolerance");
        for (const auto& [s, size] : centers) {
          CVector dir(n);
          for (std::size_t i = 0; i < n; ++i) dir[i] = b[i] + s * w[i];
          out.push_back({normalized(dir), size, sample});
        }
        done = true;
      } catch (const Degenerate& e) {
        last_reason = e.what();
      }
    }
    if (!done)
      throw ComputationFailure("limit directions: no generic configuration found (" + last_reason + ")");
  }

  // Report directions repeated across samples once.
  std::vector<LimitDirection> merged;
  for (const auto& dir : out) {
    bool seen = false;
    for (const auto& m : merged) {
      Complex inner = 0;
      for (std::size_t i = 0; i < n; ++i) inner += std::conj(m.direction[i]) * dir.direction[i];
      const double c = std::min(1.0, std::abs(inner));
      if (std::sqrt(std::max(0.0, 1 - c * c)) < 1e-4) seen = true;
    }
    if (!seen) merged.push_back(dir);
  }
  return merged;
}

bool certify_projection(const Polynomial& f, const std::vector<LimitDirection>& directions,
                        const Projection& p, double tolerance) {
  const std::size_t n = f.ring().size();
  if (p.matrix.empty()) throw DomainError("projection matrix is empty");
  Eigen::MatrixXcd m(p.matrix.size(), n);
  for (std::size_t i = 0; i < p.matrix.size(); ++i) {
    if (p.matrix[i].size() != n) throw DomainError("projection columns must match the variable count");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = p.matrix[i][j];
  }
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
  const Eigen::MatrixXcd kernel = lu.kernel();
  if (lu.rank() == static_cast<Eigen::Index>(n)) return true;
  const Eigen::MatrixXcd q = Eigen::HouseholderQR<Eigen::MatrixXcd>(kernel).householderQ() *
                             Eigen::MatrixXcd::Identity(n, kernel.cols());
  for (const auto& dir : directions) {
    if (dir.direction.size() != n) throw DomainError("direction length differs from variable count");
    const Eigen::VectorXcd u =
        Eigen::Map<const Eigen::VectorXcd>(dir.direction.data(), n).normalized();
    const Eigen::VectorXcd off = u - q * (q.adjoint() * u);
    if (off.norm() < tolerance) return false;
  }
  return true;
}

SheetRun sheet_counts(const Polynomial& f, const SheetParams& params) {
  check_hypersurface(f);
  if (!(params.eta > 0 && params.eta < 1)) throw DomainError("aperture must lie in (0, 1)");
  if (params.ladder < 1) throw DomainError("ladder needs at least two rungs");
  if (params.radius && !(*params.radius > 0)) throw DomainError("radius must be positive");

  const std::size_t n = f.ring().size();
  const Polynomial reduced = squarefree_part(f);
  const Polynomial top = top_form(reduced);
  const unsigned d = reduced.degree().value();
  const auto reports = cone_components_hypersurface(f);

  SheetRun run;
  run.affine_degree = affine_degree(Ideal(f.ring(), {f})).degree;
  double max_coef = 0;
  for (const auto& [m, c] : reduced.terms()) max_coef = std::max(max_coef, std::abs(c.get_d()));
  const double radius = params.radius.value_or(100 * (1 + max_coef));
  for (unsigned j = 0; j <= params.ladder; ++j) run.radii.push_back(radius * std::ldexp(1.0, j));

  std::string last_reason;
  for (unsigned attempt = 0; attempt <= params.max_reseeds; ++attempt) {
    std::mt19937_64 rng(mix_seed(params.seed, 0x5ee7, attempt));
    try {
      const Frame frame = draw_frame(n, rng);
      const CVector w = to_cvector(frame.kernel);
      const CVector v = random_unit(n - 1, rng);
      auto base_point = [&](const CVector& dir) {
        return to_cvector(frame.basis * Eigen::Map<const Eigen::VectorXcd>(dir.data(), n - 1));
      };
      const CVector b = base_point(v);
      if (std::abs(top.evaluate(w)) < 1e-8 * coefficient_scale(top) * std::pow(norm(w), d))
        throw Degenerate("kernel direction too close to the cone");

      const auto points = cone_fiber_points(reports, b, w);
      std::vector<Complex> locations;
      for (const auto& p : points) locations.push_back(p.s);
      const double fiber_sep = min_separation(locations);
      if (fiber_sep < 1e-3) throw Degenerate("cone fiber points nearly coincide");

      const Fiber fiber(reduced, b, w);
      const Labeler nearest_point = [&](const std::vector<Complex>& roots) {
        return assign(roots, points, false);
      };
      const Ladder ladder = track_ladder(fiber, run.radii, params.cluster_tolerance, &nearest_point);
      const auto& tracks = ladder.tracks;
      const double min_sep = ladder.min_separation;
      const unsigned refinements = ladder.refinements;

      std::vector<unsigned> totals;
      for (const auto& rung : tracks) {
        const auto counts = count_per_point(assign(rung, points, false), points.size());
        totals.push_back(std::accumulate(counts.begin(), counts.end(), 0u));
        if (totals.back() != run.affine_degree)
          throw Degenerate("fiber cardinality differs from the degree");
      }
      double offset = 0;
      const auto last = assign(tracks.back(), points, true, &offset);
      const auto before = assign(tracks[tracks.size() - 2], points, false);
      if (last != before) throw Degenerate("sheet assignment changed between the last two rungs");
      std::vector<std::vector<unsigned>> detail;
      const auto sheets =
          per_component(count_per_point(last, points.size()), points, reports.size(), &detail);

      // Directions inside the aperture must see the same counts.
      const double t_top = run.radii.back();
      bool aperture_ok = true;
      for (int k = 0; k < 3 && aperture_ok; ++k) {
        CVector u = random_unit(n - 1, rng);
        CVector v2(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) v2[i] = v[i] + 0.5 * params.eta * u[i];
        v2 = normalized(v2);
        const CVector b2 = base_point(v2);
        try {
          const auto pts2 = cone_fiber_points(reports, b2, w);
          const Fiber fiber2(reduced, b2, w);
          const auto a2 = assign(fiber2.roots(t_top), pts2, true);
          aperture_ok = per_component(count_per_point(a2, pts2.size()), pts2, reports.size()) == sheets;
        } catch (const Degenerate&) {
          aperture_ok = false;
        }
      }
      if (!aperture_ok) throw Degenerate("counts change inside the aperture");

      run.region = {v, params.eta, radius};
      run.projection = {to_cmatrix(frame.projection)};
      run.totals_per_rung = totals;
      run.min_root_separation = min_sep;
      run.min_fiber_point_separation = fiber_sep;
      run.max_final_offset = offset;
      run.aperture_consistent = true;
      run.reseeds = attempt;
      if (refinements > 0)
        run.warnings.push_back("ladder refined " + std::to_string(refinements) + " times to match tracks");
      for (std::size_t i = 0; i < reports.size(); ++i) {
        SheetReport r;
        r.component_index = i;
        r.component = reports[i].component_poly;
        r.exponent = reports[i].exponent;
        r.fiber_point_counts = detail[i];
        r.sheet_count = sheets[i];
        r.agrees = sheets[i] == reports[i].exponent;
        run.components.push_back(std::move(r));
      }
      return run;
    } catch (const Degenerate& e) {
      last_reason = e.what();
      run.warnings.push_back("attempt " + std::to_string(attempt) + ": " + last_reason);
    }
  }
  throw ComputationFailure("sheet count: no generic configuration after " +
                           std::to_string(params.max_reseeds + 1) + " attempts (" + last_reason + ")");
}

SheetReport sheet_count(const Polynomial& f, const ConeComponentReport& component,
                        const SheetParams& params) {
  const SheetRun run = sheet_counts(f, params);
  for (const auto& r : run.components)
    if (r.component == component.component_poly) return r;
  throw DomainError("not a cone component of the input");
}

}  // namespace bilip
