#include "conjlab/projection_complex.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "conjlab/cayley.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

namespace {

// Free reduction; in a free group this is the normal form.
NormalForm fr(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x.inv())
      out.pop_back();
    else
      out.push_back(x);
  }
  return NormalForm::from_canonical(std::move(out));
}

NormalForm fr_cat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return fr(w);
}

NormalForm fr_mul(const NormalForm& a, const NormalForm& b) { return fr_cat(a.letters(), b.letters()); }

NormalForm fr_inv(const NormalForm& a) { return NormalForm::from_canonical(inverse_word(a.letters())); }

// |a^-1 b|
std::size_t fr_dist(const NormalForm& a, const NormalForm& b) {
  const Word& x = a.letters();
  const Word& y = b.letters();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  return (x.size() - i) + (y.size() - i);
}

void require_free(const DefiningGraph& g) {
  if (!g.edges().empty()) throw InputError("projection complex requires a free group");
}

}  // namespace

std::vector<NormalForm> tree_geodesic(const DefiningGraph& free, const NormalForm& u,
                                      const NormalForm& v) {
  require_free(free);
  const NormalForm w = fr_mul(fr_inv(u), v);
  std::vector<NormalForm> path;
  path.reserve(w.length() + 1);
  Word cur = u.letters();
  path.push_back(u);
  for (Letter x : w.letters()) {
    if (!cur.empty() && cur.back() == x.inv())
      cur.pop_back();
    else
      cur.push_back(x);
    path.push_back(NormalForm::from_canonical(cur));
  }
  return path;
}

std::size_t tree_distance(const DefiningGraph& free, const NormalForm& u, const NormalForm& v) {
  require_free(free);
  return fr_dist(u, v);
}

PrimitiveRoot primitive_root(const DefiningGraph& free, const NormalForm& h) {
  require_free(free);
  if (h.is_identity()) throw InputError("primitive root of the identity");
  const auto [p, core] = cyclic_reduction(free, h);
  const auto [r, n] = root_of(free, core);
  return {p, r, n, fr_mul(fr_mul(p, r), fr_inv(p))};
}

// ---------------------------------------------------------------------------
// CosetFamily
//
// c.E(h) = c.p<r>p^-1 is represented by the coset c.p<r>; this is a
// G-equivariant bijection, and the axis of c.p<r> lies within |p| of c.E(h).

CosetFamily::CosetFamily(int rank, const NormalForm& h)
    : CosetFamily(DefiningGraph::free_group(rank), h) {}

CosetFamily::CosetFamily(const DefiningGraph& free, const NormalForm& h)
    : graph_(free), h_(h), root_(primitive_root(free, h)) {
  forward_ = root_.root.letters();
  backward_ = inverse_word(forward_);
}

std::size_t CosetFamily::overlap_bound() const {
  const std::size_t n = forward_.size();
  return n == 1 ? 0 : 2 * n - 1;
}

Word CosetFamily::ray_prefix(long t) const {
  const Word& src = t >= 0 ? forward_ : backward_;
  const std::size_t len = static_cast<std::size_t>(t >= 0 ? t : -t);
  Word w(len);
  for (std::size_t i = 0; i < len; ++i) w[i] = src[i % src.size()];
  return w;
}

AxisCoset CosetFamily::coset(const NormalForm& c) const {
  const long n = static_cast<long>(forward_.size());
  const long kmax = static_cast<long>(c.length()) / n + 2;
  NormalForm best = c;
  for (long k = -kmax; k <= kmax; ++k) {
    NormalForm cand = fr_cat(c.letters(), ray_prefix(k * n));
    if (cand < best) best = std::move(cand);
  }
  return {best};
}

AxisCoset CosetFamily::translate(const NormalForm& g, const AxisCoset& y) const {
  return coset(fr_mul(g, y.rep));
}

NormalForm CosetFamily::axis_vertex(const AxisCoset& y, long t) const {
  return fr_cat(y.rep.letters(), ray_prefix(t));
}

TreePoint CosetFamily::project_vertex(const AxisCoset& y, const NormalForm& x) const {
  const Word w = fr_mul(fr_inv(y.rep), x).letters();
  auto common = [&](const Word& src) {
    std::size_t i = 0;
    while (i < w.size() && w[i] == src[i % src.size()]) ++i;
    return i;
  };
  const std::size_t kp = common(forward_);
  const std::size_t km = common(backward_);
  if (kp > 0) return {static_cast<long>(kp), w.size() - kp};
  return {-static_cast<long>(km), w.size() - km};
}

long CosetFamily::default_window(const AxisCoset& y, const AxisCoset& x) const {
  return static_cast<long>(fr_dist(y.rep, x.rep) + 2 * forward_.size() + 2);
}

// Points of axis(x) beyond the overlap with axis(y) project to the ends of
// the overlap; for disjoint axes every point projects to the bridge foot.
// The overlap lies within |y^-1 x| + 2|r| - 1 of x.rep along axis(x).
Segment CosetFamily::axis_projection(const AxisCoset& y, const AxisCoset& x,
                                     std::optional<long> window) const {
  if (y == x) throw InputError("projection of a coset onto itself");
  const long w = window.value_or(default_window(y, x));
  const long t1 = project_vertex(y, axis_vertex(x, w)).param;
  const long t2 = project_vertex(y, axis_vertex(x, -w)).param;
  return {std::min(t1, t2), std::max(t1, t2)};
}

std::size_t CosetFamily::proj_distance(const AxisCoset& y, const AxisCoset& x,
                                       const AxisCoset& z) const {
  if (y == x || y == z) throw InputError("projection distance with Y in {X, Z}");
  const Segment sx = axis_projection(y, x);
  const Segment sz = x == z ? sx : axis_projection(y, z);
  return static_cast<std::size_t>(std::max(sx.hi, sz.hi) - std::min(sx.lo, sz.lo));
}

std::vector<AxisCoset> CosetFamily::hull_candidates(const AxisCoset& x,
                                                    const AxisCoset& z) const {
  if (x == z) return {};
  const Segment sx = axis_projection(x, z);
  const Segment sz = axis_projection(z, x);
  std::vector<NormalForm> hull;
  auto add_path = [&](const NormalForm& u, const NormalForm& v) {
    for (auto& p : tree_geodesic(graph_, u, v)) hull.push_back(std::move(p));
  };
  const NormalForm x_lo = axis_vertex(x, sx.lo);
  const NormalForm z_lo = axis_vertex(z, sz.lo);
  add_path(x_lo, axis_vertex(x, sx.hi));
  add_path(x_lo, z_lo);
  add_path(z_lo, axis_vertex(z, sz.hi));

  std::set<AxisCoset> found;
  const long n = static_cast<long>(forward_.size());
  for (const auto& v : hull) {
    for (long t = 0; t < n; ++t) {
      AxisCoset w = coset(fr_cat(v.letters(), inverse_word(ray_prefix(t))));
      if (!(w == x) && !(w == z)) found.insert(std::move(w));
    }
  }
  return {found.begin(), found.end()};
}

std::size_t CosetFamily::max_projection(const AxisCoset& x, const AxisCoset& z) const {
  std::size_t best = 0;
  for (const auto& w : hull_candidates(x, z)) best = std::max(best, proj_distance(w, x, z));
  return best;
}

std::vector<AxisCoset> CosetFamily::universe(int bound) const {
  if (bound < 0) throw InputError("universe bound must be non-negative");
  const Ball ball = enumerate_ball(graph_, bound);
  std::set<AxisCoset> found;
  for (const auto& e : ball.elements()) {
    AxisCoset c = coset(e);
    if (c.rep == e) found.insert(std::move(c));
  }
  return {found.begin(), found.end()};
}

std::string CosetFamily::format(const AxisCoset& y) const {
  return format_word(graph_, y.rep.letters());
}

// ---------------------------------------------------------------------------
// Standard paths and P_K

std::vector<AxisCoset> StandardPath::vertices() const {
  std::vector<AxisCoset> out{from};
  if (from == to) return out;
  out.insert(out.end(), interior.begin(), interior.end());
  out.push_back(to);
  return out;
}

StandardPath standard_path(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                           std::size_t k, const std::vector<AxisCoset>* universe) {
  if (k < 1) throw InputError("K must be at least 1");
  if (k <= family.overlap_bound())
    throw InputError("K must exceed the axis overlap bound " +
                     std::to_string(family.overlap_bound()));
  StandardPath path{x, z, {}};
  if (x == z) return path;
  const Segment sx = family.axis_projection(x, z);
  const NormalForm anchor = family.axis_vertex(x, sx.lo);

  std::vector<std::pair<std::size_t, AxisCoset>> keyed;
  for (const auto& w : family.hull_candidates(x, z)) {
    if (family.proj_distance(w, x, z) < k) continue;
    if (universe != nullptr && !std::binary_search(universe->begin(), universe->end(), w))
      throw IncompleteUniverseError("standard path leaves the universe at coset " +
                                    family.format(w));
    const Segment s = family.axis_projection(w, x);
    const std::size_t key = std::min(fr_dist(anchor, family.axis_vertex(w, s.lo)),
                                     fr_dist(anchor, family.axis_vertex(w, s.hi)));
    keyed.emplace_back(key, w);
  }
  std::sort(keyed.begin(), keyed.end());
  for (auto& [key, w] : keyed) path.interior.push_back(std::move(w));
  return path;
}

std::size_t standard_distance(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                              std::size_t k) {
  return standard_path(family, x, z, k).length();
}

bool PkGraph::connected() const {
  if (vertices_.empty()) return true;
  const auto d = distances_from(0);
  return std::none_of(d.begin(), d.end(),
                      [](std::size_t v) { return v == std::numeric_limits<std::size_t>::max(); });
}

std::size_t PkGraph::index(const AxisCoset& y) const {
  auto it = index_.find(y);
  if (it == index_.end()) throw IncompleteUniverseError("coset outside the P_K universe");
  return it->second;
}

bool PkGraph::adjacent(std::size_t i, std::size_t j) const {
  const auto& n = adjacency_[i];
  return std::binary_search(n.begin(), n.end(), j);
}

std::vector<std::size_t> PkGraph::distances_from(std::size_t i) const {
  auto it = distance_cache_.find(i);
  if (it != distance_cache_.end()) return it->second;
  std::vector<std::size_t> d(vertices_.size(), std::numeric_limits<std::size_t>::max());
  std::deque<std::size_t> queue{i};
  d[i] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency_[u]) {
      if (d[v] != std::numeric_limits<std::size_t>::max()) continue;
      d[v] = d[u] + 1;
      queue.push_back(v);
    }
  }
  distance_cache_.emplace(i, d);
  return d;
}

std::size_t PkGraph::distance(const AxisCoset& a, const AxisCoset& b) const {
  return distances_from(index(a))[index(b)];
}

PkGraph build_pk(const CosetFamily& family, const std::vector<AxisCoset>& universe,
                 std::size_t k) {
  if (k < family.overlap_bound())
    throw InputError("K below the axis overlap bound makes adjacency inexact");
  PkGraph g;
  g.k_ = k;
  g.vertices_ = universe;
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
  g.adjacency_.assign(g.vertices_.size(), {});
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) g.index_.emplace(g.vertices_[i], i);
  for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices_.size(); ++j) {
      if (family.max_projection(g.vertices_[i], g.vertices_[j]) > k) continue;
      g.adjacency_[i].push_back(j);
      g.adjacency_[j].push_back(i);
      ++g.edge_count_;
    }
  }
  return g;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json j;
  j["check"] = check;
  j["parameters"] = parameters;
  j["universe_bound"] = universe_bound;
  j["K"] = k;
  j["worst_case"] = worst_case;
  j["pass"] = pass;
  j["details"] = details;
  return j;
}

CheckReport bottleneck_check(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                             const std::vector<AxisCoset>& path, const PkGraph& pk) {
  CheckReport r;
  r.check = "bottleneck";
  r.k = pk.k();
  if (path.empty() || !(path.front() == x) || !(path.back() == z))
    throw InputError("bottleneck path must run from X to Z");
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!(path[i] == path[i + 1]) && !pk.adjacent(pk.index(path[i]), pk.index(path[i + 1])))
      throw InputError("bottleneck path is not a path in P_K");
  const StandardPath sp = standard_path(family, x, z, pk.k());
  std::size_t worst = 0;
  for (const auto& xi : sp.interior) {
    const auto d = pk.distances_from(pk.index(xi));
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (const auto& y : path) best = std::min(best, d[pk.index(y)]);
    worst = std::max(worst, best);
  }
  r.worst_case = static_cast<double>(worst);
  r.pass = worst <= 2;
  r.details["standard_interior"] = sp.interior.size();
  r.details["path_length"] = path.size() - 1;
  return r;
}

CheckReport thin_triangle_check(const CosetFamily& family, const AxisCoset& x, const AxisCoset& y,
                                const AxisCoset& z, std::size_t k) {
  CheckReport r;
  r.check = "thin_triangle";
  r.k = k;
  const StandardPath xz = standard_path(family, x, z, k);
  const StandardPath xy = standard_path(family, x, y, k);
  const StandardPath yz = standard_path(family, y, z, k);
  std::set<AxisCoset> covered(xy.interior.begin(), xy.interior.end());
  covered.insert(yz.interior.begin(), yz.interior.end());
  std::vector<std::size_t> missing;
  for (std::size_t i = 0; i < xz.interior.size(); ++i)
    if (covered.count(xz.interior[i]) == 0) missing.push_back(i);
  r.worst_case = static_cast<double>(missing.size());
  r.pass = missing.size() <= 2 && (missing.size() < 2 || missing[1] == missing[0] + 1);
  r.details["missing"] = missing.size();
  return r;
}

// ---------------------------------------------------------------------------
// Lemma suite over a universe

namespace {

struct PathTable {
  std::vector<std::vector<std::vector<std::size_t>>> interior;  // [i][j], i < j, x_i -> x_j
};

PathTable all_standard_paths(const CosetFamily& family, const std::vector<AxisCoset>& u,
                             std::size_t k) {
  PathTable t;
  t.interior.assign(u.size(), std::vector<std::vector<std::size_t>>(u.size()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      const StandardPath sp = standard_path(family, u[i], u[j], k, &u);
      auto& fwd = t.interior[i][j];
      for (const auto& w : sp.interior)
        fwd.push_back(static_cast<std::size_t>(
            std::lower_bound(u.begin(), u.end(), w) - u.begin()));
      t.interior[j][i].assign(fwd.rbegin(), fwd.rend());
    }
  }
  return t;
}

bool contains_sorted(const std::vector<std::size_t>& sorted, std::size_t v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

}  // namespace

QuasiGeodesicConstants measure_quasi_geodesic(const CosetFamily& family, const PkGraph& pk) {
  QuasiGeodesicConstants q;
  const auto& u = pk.vertices();
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto d = pk.distances_from(i);
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      if (d[j] == std::numeric_limits<std::size_t>::max()) continue;
      const StandardPath sp = standard_path(family, u[i], u[j], pk.k(), &u);
      const auto verts = sp.vertices();
      for (std::size_t s = 0; s + 1 < verts.size(); ++s)
        if (!pk.adjacent(pk.index(verts[s]), pk.index(verts[s + 1]))) q.paths_are_paths = false;
      const double n = static_cast<double>(sp.length());
      const double dd = static_cast<double>(d[j]);
      q.lambda = std::max(q.lambda, n / dd);
      q.epsilon = std::max(q.epsilon, n - dd);
      ++q.pairs;
    }
  }
  return q;
}

LemmaSuiteResult run_lemma_suite(const CosetFamily& family, const LemmaSuiteConfig& config) {
  LemmaSuiteResult out;
  const auto u = family.universe(config.universe_bound);
  const PkGraph pk = build_pk(family, u, config.k);
  const PathTable table = all_standard_paths(family, u, config.k);
  const std::size_t n = u.size();
  std::mt19937_64 rng(config.seed);

  // Thin triangles.
  {
    CheckReport& r = out.thin_triangles;
    r.check = "thin_triangle";
    r.universe_bound = config.universe_bound;
    r.k = config.k;
    std::size_t triples = 0;
    std::size_t failures = 0;
    std::vector<std::size_t> xy, yz;
    auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
      const auto& xz = table.interior[x][z];
      xy = table.interior[x][y];
      yz = table.interior[y][z];
      std::sort(xy.begin(), xy.end());
      std::sort(yz.begin(), yz.end());
      std::size_t missing = 0;
      std::size_t first = 0;
      std::size_t second = 0;
      for (std::size_t i = 0; i < xz.size(); ++i) {
        if (contains_sorted(xy, xz[i]) || contains_sorted(yz, xz[i])) continue;
        if (missing == 0) first = i;
        if (missing == 1) second = i;
        ++missing;
      }
      const bool ok = missing <= 2 && (missing < 2 || second == first + 1);
      r.worst_case = std::max(r.worst_case, static_cast<double>(missing));
      if (!ok) ++failures;
      ++triples;
    };
    if (config.triangle_samples == 0) {
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          for (std::size_t z = 0; z < n; ++z)
            if (x != z) check(x, y, z);
    } else if (n > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < config.triangle_samples; ++s) {
        const std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
        if (x != z) check(x, y, z);
      }
    }
    r.pass = failures == 0;
    r.details["triples"] = triples;
    r.details["failures"] = failures;
    r.parameters["triangle_samples"] = config.triangle_samples;
  }

  // Bottleneck: shortest paths through a random waypoint, and the standard path.
  {
    CheckReport& r = out.bottleneck;
    r.check = "bottleneck";
    r.universe_bound = config.universe_bound;
    r.k = config.k;
    std::size_t samples = 0;
    std::size_t failures = 0;
    auto shortest = [&](std::size_t from, std::size_t to) {
      const auto d = pk.distances_from(to);
      std::vector<std::size_t> p{from};
      if (d[from] == std::numeric_limits<std::size_t>::max()) return std::vector<std::size_t>{};
      while (p.back() != to) {
        std::vector<std::size_t> next;
        for (std::size_t v : pk.neighbours(p.back()))
          if (d[v] + 1 == d[p.back()]) next.push_back(v);
        std::uniform_int_distribution<std::size_t> pick(0, next.size() - 1);
        p.push_back(next[pick(rng)]);
      }
      return p;
    };
    if (n > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::size_t s = 0; s < config.path_samples; ++s) {
        const std::size_t x = pick(rng), z = pick(rng), w = pick(rng);
        if (x == z) continue;
        auto p1 = shortest(x, w);
        auto p2 = shortest(w, z);
        if (p1.empty() || p2.empty()) continue;
        p1.insert(p1.end(), p2.begin() + 1, p2.end());
        for (const auto& path : {p1, shortest(x, z)}) {
          std::size_t worst = 0;
          for (std::size_t xi : table.interior[x][z]) {
            const auto d = pk.distances_from(xi);
            std::size_t best = std::numeric_limits<std::size_t>::max();
            for (std::size_t v : path) best = std::min(best, d[v]);
            worst = std::max(worst, best);
          }
          r.worst_case = std::max(r.worst_case, static_cast<double>(worst));
          if (worst > 2) ++failures;
          ++samples;
        }
      }
    }
    r.pass = failures == 0;
    r.details["paths"] = samples;
    r.details["failures"] = failures;
    r.parameters["path_samples"] = config.path_samples;
  }

  out.quasi_geodesic = measure_quasi_geodesic(family, pk);
  return out;
}

KScan scan_k(const CosetFamily& family, int universe_bound, std::size_t k_min, std::size_t k_max,
             std::size_t triangle_samples, std::size_t path_samples, std::uint64_t seed,
             bool require_stable) {
  KScan scan;
  for (std::size_t k = std::max(k_min, family.overlap_bound() + 1); k <= k_max; ++k) {
    LemmaSuiteConfig cfg;
    cfg.universe_bound = universe_bound;
    cfg.k = k;
    cfg.triangle_samples = triangle_samples;
    cfg.path_samples = path_samples;
    cfg.seed = seed;
    KScanStep step;
    step.k = k;
    step.at_bound = run_lemma_suite(family, cfg);
    step.pass = step.at_bound.thin_triangles.pass && step.at_bound.bottleneck.pass &&
                step.at_bound.quasi_geodesic.paths_are_paths;
    if (step.pass && require_stable) {
      const PkGraph next = build_pk(family, family.universe(universe_bound + 1), k);
      step.at_next_bound = measure_quasi_geodesic(family, next);
      const auto& q0 = step.at_bound.quasi_geodesic;
      const auto& q1 = *step.at_next_bound;
      step.stable = q0.lambda == q1.lambda && q0.epsilon == q1.epsilon && q1.paths_are_paths;
      step.pass = step.stable;
    }
    const bool ok = step.pass;
    scan.steps.push_back(std::move(step));
    if (ok) {
      scan.k = k;
      scan.found = true;
      break;
    }
  }
  return scan;
}

// ---------------------------------------------------------------------------
// Quasi-stabilisers

QuasiStabilizer quasi_stabilizer_tree(const DefiningGraph& free, const NormalForm& x,
                                      std::size_t eta, int ball_radius) {
  require_free(free);
  QuasiStabilizer s;
  s.center = "vertex " + format_word(free, x.letters());
  s.eta = eta;
  const Ball ball = enumerate_ball(free, ball_radius);
  for (const auto& g : ball.elements())
    if (fr_dist(x, fr_mul(g, x)) <= eta) s.members.push_back(g);
  return s;
}

QuasiStabilizer quasi_stabilizer_complex(const CosetFamily& family, const AxisCoset& x,
                                         std::size_t eta, int ball_radius, std::size_t k) {
  QuasiStabilizer s;
  s.center = "coset " + family.format(x);
  s.eta = eta;
  const Ball ball = enumerate_ball(family.graph(), ball_radius);
  for (const auto& g : ball.elements()) {
    const AxisCoset gx = family.translate(g, x);
    if (gx == x || (eta > 0 && standard_distance(family, x, gx, k) <= eta))
      s.members.push_back(g);
  }
  return s;
}

namespace {

std::size_t distance_to_set(const NormalForm& t, const std::vector<NormalForm>& s) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& m : s) best = std::min(best, fr_dist(m, t));
  return best;
}

}  // namespace

JointStabilizerReport joint_stabilizer_check(const DefiningGraph& free,
                                             const QuasiStabilizer& sx,
                                             const QuasiStabilizer& sy, std::size_t r,
                                             int ball_radius) {
  require_free(free);
  JointStabilizerReport rep;
  rep.r = r;
  std::vector<NormalForm> inter;
  std::set<NormalForm> ys(sy.members.begin(), sy.members.end());
  for (const auto& m : sx.members)
    if (ys.count(m)) inter.push_back(m);
  rep.intersection_size = inter.size();
  const Ball ball = enumerate_ball(free, ball_radius);
  for (const auto& t : ball.elements()) {
    if (distance_to_set(t, sx.members) > r || distance_to_set(t, sy.members) > r) continue;
    ++rep.neighbourhood_size;
    if (inter.empty()) {
      rep.finite = false;
      continue;
    }
    rep.r_prime = std::max(rep.r_prime, distance_to_set(t, inter));
  }
  return rep;
}

namespace {

// d_T(Y0, g Y0) for every g in the ball, computed once.
std::vector<std::size_t> base_displacements(const CosetFamily& family, std::size_t k,
                                            const std::vector<NormalForm>& ball) {
  const AxisCoset y0 = family.base();
  std::vector<std::size_t> out;
  out.reserve(ball.size());
  for (const auto& g : ball) out.push_back(standard_distance(family, y0, family.translate(g, y0), k));
  return out;
}

std::vector<std::size_t> joint_counts(const CosetFamily& family, std::size_t k, std::size_t eps,
                                      const std::vector<NormalForm>& ball,
                                      const std::vector<std::size_t>& base_disp,
                                      const std::vector<AxisCoset>& ys) {
  std::vector<std::size_t> counts;
  for (const auto& y : ys) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < ball.size(); ++i) {
      if (base_disp[i] > eps) continue;
      const AxisCoset gy = family.translate(ball[i], y);
      if (gy == y || (eps > 0 && standard_distance(family, y, gy, k) <= eps)) ++c;
    }
    counts.push_back(c);
  }
  return counts;
}

}  // namespace

AcylindricityMeasurement measure_acylindricity(const CosetFamily& family, std::size_t k,
                                               std::size_t eps, int ball_radius,
                                               int universe_bound, std::size_t r_max) {
  AcylindricityMeasurement m;
  m.eps = eps;
  m.ball_radius = ball_radius;
  const AxisCoset y0 = family.base();
  std::vector<AxisCoset> ys;
  std::vector<std::size_t> dist;
  for (const auto& y : family.universe(universe_bound)) {
    if (y == y0) continue;
    ys.push_back(y);
    dist.push_back(standard_distance(family, y0, y, k));
  }
  std::vector<std::vector<std::size_t>> counts;
  for (int radius : {ball_radius, ball_radius + 1}) {
    const Ball ball = enumerate_ball(family.graph(), radius);
    const auto disp = base_displacements(family, k, ball.elements());
    counts.push_back(joint_counts(family, k, eps, ball.elements(), disp, ys));
  }
  for (std::size_t r = 1; r <= r_max; ++r) {
    AcylindricityRow row;
    row.min_distance = r;
    std::size_t grown = 0;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      if (dist[i] < r) continue;
      ++row.pairs;
      row.max_joint = std::max(row.max_joint, counts[0][i]);
      grown = std::max(grown, counts[1][i]);
    }
    m.rows.push_back(row);
    if (!m.r_eps && row.pairs > 0 && grown == row.max_joint) {
      m.r_eps = r;
      m.n_eps = row.max_joint;
    }
  }
  return m;
}

VSet v_set(const CosetFamily& family, std::size_t k, const AxisCoset& y, std::size_t eps,
           std::size_t m, int ball_radius, std::size_t r_threshold) {
  VSet v;
  const AxisCoset y0 = family.base();
  if (standard_distance(family, y0, y, k) < r_threshold || y == y0) {
    v.applicable = false;
    return v;
  }
  const Ball ball = enumerate_ball(family.graph(), ball_radius);
  std::vector<NormalForm> stab, fibre;
  for (const auto& g : ball.elements()) {
    const AxisCoset gy0 = family.translate(g, y0);
    if (gy0 == y0 || (eps > 0 && standard_distance(family, y0, gy0, k) <= eps))
      stab.push_back(g);
    if (gy0 == y || (eps > 0 && standard_distance(family, gy0, y, k) <= eps))
      fibre.push_back(g);
  }
  for (const auto& g : stab)
    if (!fibre.empty() && distance_to_set(g, fibre) <= m) v.members.push_back(g);
  if (!v.members.empty()) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < v.members.size(); ++i)
      for (std::size_t j = i + 1; j < v.members.size(); ++j)
        d = std::max(d, fr_dist(v.members[i], v.members[j]));
    v.diameter = d;
  }
  return v;
}

std::vector<FRow> f_measure(const CosetFamily& family, const FMeasureConfig& config) {
  if (config.m_min > config.m_max) throw InputError("empty M range");
  const AxisCoset y0 = family.base();
  const Ball ball = enumerate_ball(family.graph(), config.ball_radius);
  const auto& elems = ball.elements();

  std::vector<AxisCoset> translates;
  std::vector<NormalForm> stab;
  translates.reserve(elems.size());
  for (const auto& g : elems) {
    translates.push_back(family.translate(g, y0));
    if (translates.back() == y0 ||
        (config.eps > 0 && standard_distance(family, y0, translates.back(), config.k) <= config.eps))
      stab.push_back(g);
  }

  struct Sample {
    std::vector<std::size_t> stab_dist;  // d(g, fibre) per stab member
  };
  std::vector<Sample> samples;
  for (const auto& y : family.universe(config.universe_bound)) {
    if (y == y0 || standard_distance(family, y0, y, config.k) < config.r_threshold) continue;
    std::vector<NormalForm> fibre;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (translates[i] == y ||
          (config.eps > 0 && standard_distance(family, translates[i], y, config.k) <= config.eps))
        fibre.push_back(elems[i]);
    if (fibre.empty()) continue;
    Sample s;
    for (const auto& g : stab) s.stab_dist.push_back(distance_to_set(g, fibre));
    samples.push_back(std::move(s));
  }

  std::vector<FRow> rows;
  for (std::size_t m = config.m_min; m <= config.m_max; ++m) {
    FRow row;
    row.m = m;
    row.eps = config.eps;
    for (const auto& s : samples) {
      std::vector<const NormalForm*> members;
      for (std::size_t i = 0; i < stab.size(); ++i)
        if (s.stab_dist[i] <= m) members.push_back(&stab[i]);
      if (members.empty()) continue;
      ++row.samples;
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          row.max_diam = std::max(row.max_diam, fr_dist(*members[i], *members[j]));
    }
    rows.push_back(row);
  }
  return rows;
}

std::size_t f_lookup(const std::vector<FRow>& table, std::size_t m) {
  if (table.empty()) throw InputError("empty f table");
  std::size_t value = table.front().max_diam;
  for (const auto& row : table) {
    if (row.m > m) break;
    value = row.max_diam;
  }
  return value;
}

// ---------------------------------------------------------------------------
// Conjugator bound pipeline

double translation_estimate(const CosetFamily& family, std::size_t k, const NormalForm& g, int n) {
  const AxisCoset y0 = family.base();
  const DefiningGraph& free = family.graph();
  const auto d1 = standard_distance(family, y0, family.translate(power(free, g, n), y0), k);
  const auto d2 = standard_distance(family, y0, family.translate(power(free, g, 2 * n), y0), k);
  return (static_cast<double>(d2) - static_cast<double>(d1)) / n;
}

nlohmann::json TheoremCReport::to_json(const DefiningGraph& free) const {
  nlohmann::json j;
  j["pass"] = pass;
  j["intermediate_pass"] = intermediate_pass;
  j["extrapolated_f"] = extrapolated_f;
  j["conjugator"] = format_word(free, conjugator.letters());
  j["power_shift"] = power_shift;
  j["conj_length"] = conj_length;
  j["bound"] = bound;
  j["f_argument"] = f_argument;
  j["f_value"] = f_value;
  j["tau_a"] = tau_a;
  j["tau_b"] = tau_b;
  j["d_T(Y0,p)"] = d_y0_p;
  j["d_T(Y0,q)"] = d_y0_q;
  j["d_T(gp,q)"] = d_gp_q;
  j["d_T(y_a Y0,p)"] = d_ya_p;
  j["d_T(y_b Y0,q)"] = d_yb_q;
  j["d_T(y_a' Y0,a^m p)"] = d_ya2_amp;
  j["d_T(y_b' Y0,b^m q)"] = d_yb2_bmq;
  j["d_G(y_b,g y_a)"] = d_g_yb_gya;
  j["y_a"] = format_word(free, y_a.letters());
  j["y_b"] = format_word(free, y_b.letters());
  j["y_a'"] = format_word(free, y_a2.letters());
  j["y_b'"] = format_word(free, y_b2.letters());
  return j;
}

namespace {

// Vertices of the standard paths a^j Y0 -> a^{j+1} Y0, j in [-w, w].
std::vector<AxisCoset> quasi_axis(const CosetFamily& family, std::size_t k, const NormalForm& a,
                                  int w) {
  const AxisCoset y0 = family.base();
  const auto base = standard_path(family, y0, family.translate(a, y0), k).vertices();
  std::vector<AxisCoset> out;
  for (int j = -w; j <= w; ++j) {
    const NormalForm aj = power(family.graph(), a, j);
    for (const auto& v : base) {
      AxisCoset t = family.translate(aj, v);
      if (out.empty() || !(out.back() == t)) out.push_back(std::move(t));
    }
  }
  return out;
}

// First vertex minimising d_T to `target`, scanning from the middle outwards.
AxisCoset closest_on(const CosetFamily& family, std::size_t k, const std::vector<AxisCoset>& line,
                     const AxisCoset& target) {
  const std::size_t mid = line.size() / 2;
  std::vector<std::size_t> order{mid};
  for (std::size_t s = 1; s <= mid + 1; ++s) {
    if (mid >= s) order.push_back(mid - s);
    if (mid + s < line.size()) order.push_back(mid + s);
  }
  std::size_t best = std::numeric_limits<std::size_t>::max();
  AxisCoset arg = line[mid];
  for (std::size_t i : order) {
    const std::size_t d = standard_distance(family, line[i], target, k);
    if (d < best) {
      best = d;
      arg = line[i];
    }
  }
  return arg;
}

// Vertex start.u, u a prefix of `word`, minimising d_T(start.u Y0, target).
std::pair<NormalForm, std::size_t> closest_prefix(const CosetFamily& family, std::size_t k,
                                                  const NormalForm& start, const NormalForm& word,
                                                  const AxisCoset& target) {
  const AxisCoset y0 = family.base();
  std::pair<NormalForm, std::size_t> best{start, std::numeric_limits<std::size_t>::max()};
  Word prefix;
  for (std::size_t i = 0; i <= word.length(); ++i) {
    if (i > 0) prefix.push_back(word.letters()[i - 1]);
    const NormalForm v = fr_cat(start.letters(), prefix);
    const std::size_t d = standard_distance(family, family.translate(v, y0), target, k);
    if (d < best.second) best = {v, d};
  }
  return best;
}

}  // namespace

TheoremCReport theorem_c_pipeline(const CosetFamily& family, std::size_t k, const NormalForm& a,
                                  const NormalForm& b, const NormalForm& g, int m,
                                  const std::vector<FRow>& f_table) {
  const DefiningGraph& free = family.graph();
  require_free(free);
  if (m < 1) throw InputError("m must be positive");
  if (!(fr_mul(fr_mul(g, a), fr_inv(g)) == b)) throw InputError("g a g^-1 != b");
  TheoremCReport rep;
  rep.tau_a = translation_estimate(family, k, a);
  rep.tau_b = translation_estimate(family, k, b);
  if (rep.tau_a <= 0.0 || rep.tau_b <= 0.0)
    throw InputError("theorem C pipeline needs loxodromic a and b");

  const AxisCoset y0 = family.base();
  const int w = m + 2;
  const auto axis_a = quasi_axis(family, k, a, w);
  std::vector<AxisCoset> axis_b;
  for (const auto& v : axis_a) axis_b.push_back(family.translate(g, v));

  const AxisCoset p = closest_on(family, k, axis_a, y0);
  const AxisCoset q = closest_on(family, k, axis_b, y0);
  rep.d_y0_p = standard_distance(family, y0, p, k);
  rep.d_y0_q = standard_distance(family, y0, q, k);

  // g <- b^r g with b^r g p nearest q.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (int s = 0; s <= w; ++s) {
    for (int r : {s, -s}) {
      const NormalForm gr = fr_mul(power(free, b, r), g);
      const std::size_t d = standard_distance(family, family.translate(gr, p), q, k);
      if (d < best) {
        best = d;
        rep.power_shift = r;
        rep.conjugator = gr;
      }
      if (s == 0) break;
    }
  }
  rep.d_gp_q = best;
  const NormalForm& gn = rep.conjugator;

  const auto [ya, dya] = closest_prefix(family, k, NormalForm{}, a, p);
  const auto [yb, dyb] = closest_prefix(family, k, NormalForm{}, b, q);
  const AxisCoset amp = family.translate(power(free, a, m), p);
  const AxisCoset bmq = family.translate(power(free, b, m), q);
  const auto [ya2, dya2] = closest_prefix(family, k, power(free, a, m - 1), a, amp);
  const auto [yb2, dyb2] = closest_prefix(family, k, power(free, b, m - 1), b, bmq);
  rep.y_a = ya;
  rep.y_b = yb;
  rep.y_a2 = ya2;
  rep.y_b2 = yb2;
  rep.d_ya_p = dya;
  rep.d_yb_q = dyb;
  rep.d_ya2_amp = dya2;
  rep.d_yb2_bmq = dyb2;
  rep.d_g_yb_gya = fr_dist(yb, fr_mul(gn, ya));

  rep.f_argument = static_cast<std::size_t>(m) * (a.length() + b.length());
  rep.f_value = f_lookup(f_table, rep.f_argument);
  rep.extrapolated_f = f_table.back().m < rep.f_argument;
  rep.conj_length = gn.length();
  rep.bound = a.length() + b.length() + rep.f_value;
  rep.intermediate_pass = rep.d_g_yb_gya <= rep.f_value;
  rep.pass = rep.conj_length <= rep.bound;
  return rep;
}

}  // namespace conjlab
