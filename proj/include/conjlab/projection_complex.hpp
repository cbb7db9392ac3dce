#pragma once

// Cosets c.E(h) of a free group, viewed as translated axes in the Cayley
// tree, with nearest-point projections between them, standard paths, the
// projection complex P_K and the quasi-tree lemma checks built on it.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "conjlab/raag.hpp"

namespace conjlab {

struct AxisCoset {
  NormalForm rep;  // shortest element of rep.E(h)

  friend bool operator==(const AxisCoset&, const AxisCoset&) = default;
  friend bool operator<(const AxisCoset& a, const AxisCoset& b) { return a.rep < b.rep; }
};

struct AxisCosetHash {
  std::size_t operator()(const AxisCoset& c) const noexcept { return WordHash{}(c.rep.letters()); }
};

// Closed interval of axis parameters; parameter t names the vertex rep.P(t)
// where P(t) is the length-|t| prefix of root^{+inf} (t >= 0) or root^{-inf}.
struct Segment {
  long lo = 0;
  long hi = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct TreePoint {
  long param = 0;
  std::size_t distance = 0;
};

// Tree geodesic between two vertices of the Cayley tree of F_n.
std::vector<NormalForm> tree_geodesic(const DefiningGraph& free, const NormalForm& u,
                                      const NormalForm& v);
std::size_t tree_distance(const DefiningGraph& free, const NormalForm& u, const NormalForm& v);

// h = p.r^n.p^-1 with r cyclically reduced and not a proper power.
struct PrimitiveRoot {
  NormalForm conjugator;  // p
  NormalForm root;        // r
  int exponent = 1;       // n
  NormalForm in_place;    // p.r.p^-1
};
PrimitiveRoot primitive_root(const DefiningGraph& free, const NormalForm& h);

// The family Y = { c.E(h) } for a fixed h in F_rank.
class CosetFamily {
 public:
  CosetFamily(int rank, const NormalForm& h);
  CosetFamily(const DefiningGraph& free, const NormalForm& h);

  const DefiningGraph& graph() const { return graph_; }
  const NormalForm& h() const { return h_; }
  // Cyclically reduced primitive root generating the stabiliser of the base axis.
  const NormalForm& root() const { return root_.root; }
  // Longest possible common segment (in edges) of two distinct axes.
  std::size_t overlap_bound() const;

  AxisCoset coset(const NormalForm& c) const;
  // The coset E(h) itself.
  AxisCoset base() const { return coset(root_.conjugator); }
  AxisCoset translate(const NormalForm& g, const AxisCoset& y) const;
  NormalForm axis_vertex(const AxisCoset& y, long t) const;

  TreePoint project_vertex(const AxisCoset& y, const NormalForm& x) const;
  // Nearest points of axis(y) to axis(x): one vertex when disjoint, the
  // common segment otherwise. `window` overrides the search half-width.
  Segment axis_projection(const AxisCoset& y, const AxisCoset& x,
                          std::optional<long> window = std::nullopt) const;
  long default_window(const AxisCoset& y, const AxisCoset& x) const;
  std::size_t proj_distance(const AxisCoset& y, const AxisCoset& x, const AxisCoset& z) const;

  // Every coset W whose axis can carry d_W(x, z) > overlap_bound(): those whose
  // axes pass through the convex hull of the mutual projections of x and z.
  std::vector<AxisCoset> hull_candidates(const AxisCoset& x, const AxisCoset& z) const;
  std::size_t max_projection(const AxisCoset& x, const AxisCoset& z) const;

  // All cosets with canonical rep length <= bound, shortlex-sorted.
  std::vector<AxisCoset> universe(int bound) const;

  std::string format(const AxisCoset& y) const;

 private:
  Word ray_prefix(long t) const;

  DefiningGraph graph_;
  NormalForm h_;
  PrimitiveRoot root_;
  Word forward_;   // root
  Word backward_;  // root^-1
};

struct StandardPath {
  AxisCoset from;
  AxisCoset to;
  std::vector<AxisCoset> interior;

  std::vector<AxisCoset> vertices() const;
  std::size_t length() const { return from == to ? 0 : interior.size() + 1; }
};

// Y_K(x, z) in path order. Exact over all of Y when k > overlap_bound(); if
// `universe` is given, members outside it raise IncompleteUniverseError.
StandardPath standard_path(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                           std::size_t k, const std::vector<AxisCoset>* universe = nullptr);
// Length of the standard path, used as the metric on P_K.
std::size_t standard_distance(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                              std::size_t k);

class PkGraph {
 public:
  const std::vector<AxisCoset>& vertices() const { return vertices_; }
  std::size_t k() const { return k_; }
  std::size_t edge_count() const { return edge_count_; }
  bool connected() const;
  bool contains(const AxisCoset& y) const { return index_.count(y) != 0; }
  std::size_t index(const AxisCoset& y) const;
  const std::vector<std::size_t>& neighbours(std::size_t i) const { return adjacency_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const;
  // Graph distances from i; unreachable vertices get SIZE_MAX.
  std::vector<std::size_t> distances_from(std::size_t i) const;
  std::size_t distance(const AxisCoset& a, const AxisCoset& b) const;

 private:
  friend PkGraph build_pk(const CosetFamily&, const std::vector<AxisCoset>&, std::size_t);
  std::vector<AxisCoset> vertices_;
  std::unordered_map<AxisCoset, std::size_t, AxisCosetHash> index_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::size_t k_ = 0;
  std::size_t edge_count_ = 0;
  mutable std::unordered_map<std::size_t, std::vector<std::size_t>> distance_cache_;
};

// Vertices = universe; x ~ z iff d_W(x, z) <= k for every coset W.
PkGraph build_pk(const CosetFamily& family, const std::vector<AxisCoset>& universe, std::size_t k);

struct CheckReport {
  std::string check;
  nlohmann::json parameters = nlohmann::json::object();
  int universe_bound = -1;
  std::size_t k = 0;
  double worst_case = 0.0;
  bool pass = true;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const;
};

CheckReport bottleneck_check(const CosetFamily& family, const AxisCoset& x, const AxisCoset& z,
                             const std::vector<AxisCoset>& path, const PkGraph& pk);
CheckReport thin_triangle_check(const CosetFamily& family, const AxisCoset& x, const AxisCoset& y,
                                const AxisCoset& z, std::size_t k);

struct QuasiGeodesicConstants {
  double lambda = 1.0;    // max standard length / graph distance
  double epsilon = 0.0;   // max standard length - graph distance
  std::size_t pairs = 0;
  bool paths_are_paths = true;  // consecutive standard-path vertices adjacent in P_K
};
QuasiGeodesicConstants measure_quasi_geodesic(const CosetFamily& family, const PkGraph& pk);

struct LemmaSuiteConfig {
  int universe_bound = 5;
  std::size_t k = 0;
  std::size_t triangle_samples = 0;  // 0 = every triple
  std::size_t path_samples = 200;
  std::uint64_t seed = 1;
};

struct LemmaSuiteResult {
  CheckReport thin_triangles;
  CheckReport bottleneck;
  QuasiGeodesicConstants quasi_geodesic;
};

LemmaSuiteResult run_lemma_suite(const CosetFamily& family, const LemmaSuiteConfig& config);

struct KScanStep {
  std::size_t k = 0;
  LemmaSuiteResult at_bound;
  std::optional<QuasiGeodesicConstants> at_next_bound;
  bool stable = true;  // quasi-geodesic constants agree at bound and bound + 1
  bool pass = false;
};

// Least k in [k_min, k_max] passing thin triangles and bottleneck on the
// reference universe and, when `require_stable`, with the same quasi-geodesic
// constants on the universe one size larger.
struct KScan {
  std::size_t k = 0;
  bool found = false;
  std::vector<KScanStep> steps;
};
KScan scan_k(const CosetFamily& family, int universe_bound, std::size_t k_min, std::size_t k_max,
             std::size_t triangle_samples, std::size_t path_samples, std::uint64_t seed,
             bool require_stable = true);

// ---------------------------------------------------------------------------
// Quasi-stabilisers and acylindricity measurements

struct QuasiStabilizer {
  std::string center;
  std::size_t eta = 0;
  std::vector<NormalForm> members;
};

QuasiStabilizer quasi_stabilizer_tree(const DefiningGraph& free, const NormalForm& x,
                                      std::size_t eta, int ball_radius);
QuasiStabilizer quasi_stabilizer_complex(const CosetFamily& family, const AxisCoset& x,
                                         std::size_t eta, int ball_radius, std::size_t k);

struct JointStabilizerReport {
  std::size_t r = 0;
  std::size_t r_prime = 0;  // least r' covering the sample
  bool finite = true;       // false if the intersection is empty but the neighbourhoods meet
  std::size_t neighbourhood_size = 0;
  std::size_t intersection_size = 0;
};

JointStabilizerReport joint_stabilizer_check(const DefiningGraph& free,
                                             const QuasiStabilizer& sx,
                                             const QuasiStabilizer& sy, std::size_t r,
                                             int ball_radius);

struct AcylindricityRow {
  std::size_t min_distance = 0;  // R
  std::size_t max_joint = 0;     // N(R) at the given ball radius
  std::size_t pairs = 0;
};

struct AcylindricityMeasurement {
  std::size_t eps = 0;
  int ball_radius = 0;
  std::vector<AcylindricityRow> rows;
  std::optional<std::size_t> r_eps;  // least R whose N(R) agrees at ball_radius and ball_radius+1
  std::size_t n_eps = 0;
};

// Joint eps-quasi-stabilisers of Y0 and y for the cosets y of the universe.
AcylindricityMeasurement measure_acylindricity(const CosetFamily& family, std::size_t k,
                                               std::size_t eps, int ball_radius,
                                               int universe_bound, std::size_t r_max);

struct VSet {
  bool applicable = true;
  std::vector<NormalForm> members;
  std::optional<std::size_t> diameter;  // empty when members is empty
};

// V_eps(y) = { g in Stab_eps(Y0) : d_S(g, pi^-1(N_eps(y))) <= M } inside the ball.
VSet v_set(const CosetFamily& family, std::size_t k, const AxisCoset& y, std::size_t eps,
           std::size_t m, int ball_radius, std::size_t r_threshold);

struct FRow {
  std::size_t m = 0;
  std::size_t max_diam = 0;
  std::size_t samples = 0;
  std::size_t eps = 0;
};

struct FMeasureConfig {
  std::size_t k = 1;
  std::size_t eps = 0;
  std::size_t m_min = 0;
  std::size_t m_max = 12;
  int ball_radius = 7;
  int universe_bound = 3;
  std::size_t r_threshold = 1;
};

std::vector<FRow> f_measure(const CosetFamily& family, const FMeasureConfig& config);
// f(M) read from a table; beyond the last row the last value is used.
std::size_t f_lookup(const std::vector<FRow>& table, std::size_t m);

struct TheoremCReport {
  bool pass = false;
  bool intermediate_pass = false;
  bool extrapolated_f = false;
  NormalForm conjugator;  // normalised b^r g
  int power_shift = 0;    // r
  std::size_t conj_length = 0;
  std::size_t bound = 0;
  std::size_t f_argument = 0;
  std::size_t f_value = 0;
  std::size_t d_y0_p = 0;
  std::size_t d_y0_q = 0;
  std::size_t d_gp_q = 0;
  std::size_t d_ya_p = 0;
  std::size_t d_yb_q = 0;
  std::size_t d_ya2_amp = 0;
  std::size_t d_yb2_bmq = 0;
  std::size_t d_g_yb_gya = 0;
  NormalForm y_a, y_b, y_a2, y_b2;
  double tau_a = 0.0;
  double tau_b = 0.0;

  nlohmann::json to_json(const DefiningGraph& free) const;
};

// Translation estimate (d(Y0, g^{2n} Y0) - d(Y0, g^n Y0)) / n on P_K.
double translation_estimate(const CosetFamily& family, std::size_t k, const NormalForm& g,
                            int n = 4);

TheoremCReport theorem_c_pipeline(const CosetFamily& family, std::size_t k, const NormalForm& a,
                                  const NormalForm& b, const NormalForm& g, int m,
                                  const std::vector<FRow>& f_table);

}  // namespace conjlab
