#pragma once

// Exhaustive ground truth in the Cayley graph of A_Gamma.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "conjlab/raag.hpp"

namespace conjlab {

inline constexpr std::size_t kDefaultElementBudget = 10'000'000;

// Word-problem solution by stacking letters into one column per generator
// (a letter pushes blank markers onto the columns of the generators it does
// not commute with). Two words are equal in A_Gamma iff their pilings are
// identical. Shares no code with normal_form().
class Piling {
 public:
  explicit Piling(const DefiningGraph& graph);

  void push(Letter x);
  void push(const Word& w) {
    for (Letter x : w) push(x);
  }
  bool is_trivial() const;
  // Injective encoding of the pile.
  std::string key() const;

 private:
  static constexpr std::uint16_t kBlank = 0xFFFF;
  const DefiningGraph* graph_;
  std::vector<std::vector<std::uint16_t>> columns_;
};

std::string piling_key(const DefiningGraph& graph, const Word& w);

// All elements of length <= radius, shortlex-sorted.
class Ball {
 public:
  const DefiningGraph& graph() const { return graph_; }
  int radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<NormalForm>& elements() const { return elements_; }
  // Elements of length exactly r.
  std::span<const NormalForm> sphere(int r) const;
  // Elements of length <= r.
  std::span<const NormalForm> within(int r) const;
  bool contains(const NormalForm& g) const { return index_.count(g.letters()) != 0; }

 private:
  friend Ball enumerate_ball(const DefiningGraph&, int, std::size_t);
  DefiningGraph graph_;
  int radius_ = 0;
  std::vector<NormalForm> elements_;
  std::vector<std::size_t> layer_end_;
  std::unordered_map<Word, std::size_t, WordHash> index_;
};

Ball enumerate_ball(const DefiningGraph& graph, int radius,
                    std::size_t budget = kDefaultElementBudget);

// Breadth-first distances from the identity, identifying vertices by their
// piling keys only.
std::unordered_map<std::string, int> bfs_distances(const DefiningGraph& graph, int radius,
                                                   std::size_t budget = kDefaultElementBudget);

inline std::size_t word_distance(const DefiningGraph& graph, const NormalForm& x,
                                 const NormalForm& y) {
  return multiply(graph, invert(graph, x), y).length();
}

struct NearestPoint {
  NormalForm element;
  std::size_t distance = 0;
  bool unique = true;
};

// Minimises |s^-1 x| over s in `set`; ties go to the shortlex-least s.
NearestPoint nearest_in_set(const DefiningGraph& graph, const NormalForm& x,
                            std::span<const NormalForm> set);

// Shortlex-least g of minimal length <= r_max with g a = b g. An empty result
// means "none within r_max", never "not conjugate".
std::optional<NormalForm> shortest_conjugator_bruteforce(
    const DefiningGraph& graph, const NormalForm& a, const NormalForm& b, int r_max,
    std::size_t budget = kDefaultElementBudget);
// Same search over a precomputed ball (r_max is clipped to its radius).
std::optional<NormalForm> shortest_conjugator_bruteforce(const Ball& ball, const NormalForm& a,
                                                         const NormalForm& b, int r_max);

// Growth counts for sanity checks.
std::size_t free_group_ball_size(int rank, int radius);
std::size_t free_abelian2_ball_size(int radius);

}  // namespace conjlab
