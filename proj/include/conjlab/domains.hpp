#pragma once

// The index set of the hierarchy on A_Gamma: parallelism classes of standard
// cosets c.A_Delta, their nesting/orthogonality/transversality, gates onto
// convex cosets, product regions and Big sets.
//
// Distances d_U are measured in the word metric of F_U between gates (the
// "F-metric proxy"), an upper bound for distances in the curve-graph-like
// space attached to U.

#include <cstddef>
#include <string>
#include <vector>

#include "conjlab/raag.hpp"

namespace conjlab {

// The convex subcomplex rep . A_delta (rep need not be canonical).
struct Coset {
  NormalForm rep;
  VertexSet delta;
};

struct Gate {
  NormalForm point;
  std::size_t distance = 0;
};

// Maximal prefix (as a trace) of the reduced word w whose letters lie in s.
Word parabolic_prefix(const DefiningGraph& graph, const Word& w, VertexSet s);

// Unique nearest point of the coset to x.
Gate gate(const DefiningGraph& graph, const NormalForm& x, const Coset& target);

// x in A_left . A_right
bool in_double_coset(const DefiningGraph& graph, const NormalForm& x, VertexSet left,
                     VertexSet right);

bool is_irreducible(VertexSet s, const DefiningGraph& graph);

class Domain {
 public:
  Domain() = default;
  // Canonicalises c to the shortest element of c . A_{star(delta)}.
  static Domain make(const DefiningGraph& graph, VertexSet delta, const NormalForm& c);

  VertexSet delta() const { return delta_; }
  const NormalForm& rep() const { return rep_; }

  Coset f_coset() const { return {rep_, delta_}; }

  friend bool operator==(const Domain&, const Domain&) = default;
  friend bool operator<(const Domain& a, const Domain& b) {
    if (a.delta_ != b.delta_) return a.delta_ < b.delta_;
    return a.rep_ < b.rep_;
  }

 private:
  VertexSet delta_;
  NormalForm rep_;
};

Domain translate(const DefiningGraph& graph, const Domain& d, const NormalForm& h);

enum class Relation { kEqual, kNestedIn, kContains, kOrthogonal, kTransverse };
std::string to_string(Relation r);

// kNestedIn means U is properly nested in V; kContains means V in U.
Relation relation(const DefiningGraph& graph, const Domain& u, const Domain& v);

struct ProductRegion {
  Domain base;
  Coset f_part;   // rep . A_delta
  Coset e_part;   // rep . A_{lk(delta)}
  Coset region;   // rep . A_{delta u lk(delta)}
};

ProductRegion product_region(const DefiningGraph& graph, const Domain& base);

struct BigSet {
  NormalForm owner;
  NormalForm prefix;                // cyclic conjugating prefix
  std::vector<Domain> domains;      // pairwise orthogonal
  std::vector<NormalForm> factors;  // commuting pieces of the cyclic core
  bool maximal = false;             // no further domain is orthogonal to all of them
};

BigSet big(const DefiningGraph& graph, const NormalForm& g);

// |gate_U(x)^-1 gate_U(y)| in F_U.
std::size_t domain_distance(const DefiningGraph& graph, const Domain& u, const NormalForm& x,
                            const NormalForm& y);

inline constexpr std::size_t kDefaultCandidateBudget = 2'000'000;

// Domains with irreducible delta whose canonical rep lies within `slack` of a
// prefix of the geodesic from x to y.
std::vector<Domain> candidate_domains(const DefiningGraph& graph, const NormalForm& x,
                                      const NormalForm& y, int slack,
                                      std::size_t budget = kDefaultCandidateBudget);

std::vector<Domain> relevant_domains(const DefiningGraph& graph, const NormalForm& x,
                                     const NormalForm& y, std::size_t threshold, int search_radius,
                                     std::size_t budget = kDefaultCandidateBudget);

struct ProductDistanceReport {
  std::size_t exact = 0;      // d(x, P) via the gate
  std::size_t proxy_sum = 0;  // sum of thresholded F-metric terms
  std::size_t terms = 0;
  NormalForm gate;
  double ratio = 0.0;  // exact / proxy_sum, 0 if the sum vanishes
};

ProductDistanceReport dist_to_product_region_check(const DefiningGraph& graph, const NormalForm& x,
                                                   const ProductRegion& region,
                                                   std::size_t threshold, int slack = 1);

struct TranslationLength {
  std::size_t group = 0;
  std::vector<std::size_t> factors;
};

TranslationLength translation_length_group(const DefiningGraph& graph, const NormalForm& g);

}  // namespace conjlab
