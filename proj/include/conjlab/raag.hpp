#pragma once

// Right-angled Artin groups: defining graphs, letters, words and the
// canonical (shortlex-least, fully reduced) normal form.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conjlab {

// A generator or its inverse. Codes order letters as v0 < v0^-1 < v1 < ...
struct Letter {
  std::uint16_t code = 0;

  static constexpr Letter make(int vertex, bool inverse = false) {
    return Letter{static_cast<std::uint16_t>(2 * vertex + (inverse ? 1 : 0))};
  }
  constexpr int vertex() const { return code >> 1; }
  constexpr bool inverse() const { return (code & 1U) != 0; }
  constexpr int sign() const { return inverse() ? -1 : 1; }
  constexpr Letter inv() const {
    return Letter{static_cast<std::uint16_t>(code ^ 1U)};
  }

  friend constexpr auto operator<=>(Letter, Letter) = default;
};

using Word = std::vector<Letter>;

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (Letter x : w) {
      h ^= x.code + 1U;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Shortlex: shorter first, then lexicographic in the letter order.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Set of vertex indices; graphs are limited to 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(1ULL << v); }
  static constexpr VertexSet first_n(std::size_t n) {
    return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
  }

  constexpr bool contains(int v) const { return ((bits_ >> v) & 1ULL) != 0; }
  constexpr void insert(int v) { bits_ |= (1ULL << v); }
  constexpr void erase(int v) { bits_ &= ~(1ULL << v); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Finite simplicial graph presenting A_Gamma. Vertex order fixes the letter
// order and hence the normal form.
class DefiningGraph {
 public:
  DefiningGraph() = default;
  DefiningGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<std::string, std::string>>& edges);

  static DefiningGraph free_group(int rank);
  static DefiningGraph free_abelian(int rank);
  static DefiningGraph path(int n);
  static DefiningGraph cycle(int n);

  std::size_t size() const { return names_.size(); }
  const std::string& name(int v) const { return names_[static_cast<std::size_t>(v)]; }
  const std::vector<std::string>& names() const { return names_; }
  int index(std::string_view name) const;  // throws InputError
  bool has_vertex(std::string_view name) const;

  bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
  // Distinct generators that commute. Letters on the same vertex are
  // dependent for trace purposes.
  bool adjacent(Letter x, Letter y) const { return adjacent(x.vertex(), y.vertex()); }
  // Group-level commutation of the two letters.
  bool commute(Letter x, Letter y) const {
    return x.vertex() == y.vertex() || adjacent(x, y);
  }
  VertexSet neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  VertexSet all() const { return VertexSet::first_n(size()); }
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const DefiningGraph&, const DefiningGraph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<VertexSet> adj_;
};

// Canonical representative of a group element.
class NormalForm {
 public:
  NormalForm() = default;

  // The caller guarantees `letters` is already the canonical form.
  static NormalForm from_canonical(Word letters) { return NormalForm(std::move(letters)); }

  const Word& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
  friend bool operator<(const NormalForm& a, const NormalForm& b) {
    return shortlex_less(a.letters_, b.letters_);
  }

 private:
  explicit NormalForm(Word letters) : letters_(std::move(letters)) {}
  Word letters_;
};

struct NormalFormHash {
  std::size_t operator()(const NormalForm& g) const noexcept { return WordHash{}(g.letters()); }
};

// Word syntax: space separated tokens `x`, `x^-1`, `x^k`. A token such as
// `a3` is read as a^3 when `a3` is not itself a vertex name.
Word parse_word(const DefiningGraph& graph, std::string_view text);
std::string format_word(const DefiningGraph& graph, const Word& word);
inline std::string format_word(const DefiningGraph& graph, const NormalForm& g) {
  return format_word(graph, g.letters());
}

Word inverse_word(const Word& w);
Word power_word(const Word& w, int n);

// Free and commutation cancellation to a fixed point; letter order otherwise
// preserved.
Word reduce(const DefiningGraph& graph, const Word& w);
// Shortlex-least shuffle of a reduced word.
Word shortlex_shuffle(const DefiningGraph& graph, const Word& reduced);

NormalForm normal_form(const DefiningGraph& graph, const Word& w);
NormalForm parse_element(const DefiningGraph& graph, std::string_view text);
NormalForm multiply(const DefiningGraph& graph, const NormalForm& u, const NormalForm& v);
NormalForm multiply(const DefiningGraph& graph, std::initializer_list<NormalForm> factors);
NormalForm invert(const DefiningGraph& graph, const NormalForm& u);
NormalForm conjugate(const DefiningGraph& graph, const NormalForm& g, const NormalForm& x);  // g x g^-1
NormalForm power(const DefiningGraph& graph, const NormalForm& g, int n);

// Positions of letters that can be shuffled to the front (resp. back).
std::vector<std::size_t> first_letters(const DefiningGraph& graph, const Word& w);
std::vector<std::size_t> last_letters(const DefiningGraph& graph, const Word& w);

// g = prefix * core * prefix^-1 with core cyclically reduced.
struct CyclicForm {
  NormalForm prefix;
  NormalForm core;
  NormalForm canonical_core;
};

// Element of the rotation/commutation closure of a cyclic core, together
// with r such that element = r^-1 * core * r.
struct RotationState {
  NormalForm element;
  NormalForm rotation;
};

inline constexpr std::size_t kDefaultClosureBudget = 1'000'000;

std::pair<NormalForm, NormalForm> cyclic_reduction(const DefiningGraph& graph, const NormalForm& g);
// Breadth-first closure under one-letter rotations of the (commutation class
// of the) core; the first entry is the core itself.
std::vector<RotationState> rotation_closure(const DefiningGraph& graph, const NormalForm& core,
                                            std::size_t budget = kDefaultClosureBudget);
CyclicForm cyclic_form(const DefiningGraph& graph, const NormalForm& g,
                       std::size_t budget = kDefaultClosureBudget);
inline CyclicForm cyclic_form(const DefiningGraph& graph, const Word& w,
                              std::size_t budget = kDefaultClosureBudget) {
  return cyclic_form(graph, normal_form(graph, w), budget);
}
bool is_cyclically_reduced(const DefiningGraph& graph, const NormalForm& g);

VertexSet support(const NormalForm& g);
VertexSet link(VertexSet s, const DefiningGraph& graph);
VertexSet star(VertexSet s, const DefiningGraph& graph);
// Finest partition of s into pairwise fully joined blocks, ordered by least
// vertex.
std::vector<VertexSet> join_factors(VertexSet s, const DefiningGraph& graph);
// Letters of w restricted to vertices in s, in order.
Word restrict_word(const Word& w, VertexSet s);
// Primitive root r and exponent n with g = r^n; g must be non-trivial.
std::pair<NormalForm, int> root_of(const DefiningGraph& graph, const NormalForm& g);

std::string format_vertex_set(const DefiningGraph& graph, VertexSet s);
VertexSet parse_vertex_set(const DefiningGraph& graph, const std::vector<std::string>& names);

}  // namespace conjlab
