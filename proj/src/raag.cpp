#include "conjlab/raag.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "conjlab/errors.hpp"

namespace conjlab {

DefiningGraph::DefiningGraph(std::vector<std::string> vertices,
                             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)), adj_(names_.size()) {
  if (names_.size() > 64) throw InputError("defining graph has more than 64 vertices");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty vertex name");
    if (names_[i].find_first_of(" ^\t\n") != std::string::npos)
      throw InputError("vertex name '" + names_[i] + "' contains a reserved character");
    for (std::size_t j = 0; j < i; ++j)
      if (names_[i] == names_[j]) throw InputError("duplicate vertex '" + names_[i] + "'");
  }
  for (const auto& [u, v] : edges) {
    int iu = index(u);
    int iv = index(v);
    if (iu == iv) throw InputError("self-loop at vertex '" + u + "'");
    adj_[static_cast<std::size_t>(iu)].insert(iv);
    adj_[static_cast<std::size_t>(iv)].insert(iu);
  }
}

namespace {

std::vector<std::string> letter_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) {
    if (n <= 26) {
      out.emplace_back(1, static_cast<char>('a' + i));
    } else {
      out.push_back("x" + std::to_string(i));
    }
  }
  return out;
}

}  // namespace

DefiningGraph DefiningGraph::free_group(int rank) { return DefiningGraph(letter_names(rank), {}); }

DefiningGraph DefiningGraph::free_abelian(int rank) {
  auto names = letter_names(rank);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) edges.emplace_back(names[i], names[j]);
  return DefiningGraph(names, edges);
}

DefiningGraph DefiningGraph::path(int n) {
  auto names = letter_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(names[i], names[i + 1]);
  return DefiningGraph(names, edges);
}

DefiningGraph DefiningGraph::cycle(int n) {
  auto names = letter_names(n);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return DefiningGraph(names, edges);
}

int DefiningGraph::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  throw InputError("unknown generator '" + std::string(name) + "'");
}

bool DefiningGraph::has_vertex(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::vector<std::pair<int, int>> DefiningGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < static_cast<int>(size()); ++u)
    for (int v = u + 1; v < static_cast<int>(size()); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Words

namespace {

bool parse_int(std::string_view s, int& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

void append_power(Word& w, int vertex, int exponent) {
  Letter x = Letter::make(vertex, exponent < 0);
  for (int i = 0; i < std::abs(exponent); ++i) w.push_back(x);
}

}  // namespace

Word parse_word(const DefiningGraph& graph, std::string_view text) {
  Word out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;

    std::string_view name = token;
    int exponent = 1;
    if (auto caret = token.find('^'); caret != std::string_view::npos) {
      name = token.substr(0, caret);
      std::string_view exp = token.substr(caret + 1);
      if (exp.size() >= 2 && exp.front() == '{' && exp.back() == '}')
        exp = exp.substr(1, exp.size() - 2);
      if (!parse_int(exp, exponent))
        throw InputError("bad exponent in token '" + std::string(token) + "'");
    } else if (!graph.has_vertex(name)) {
      // `a3` shorthand for a^3
      std::size_t digits = name.find_first_of("-0123456789");
      if (digits != std::string_view::npos && digits > 0 &&
          graph.has_vertex(name.substr(0, digits)) && parse_int(name.substr(digits), exponent)) {
        name = name.substr(0, digits);
      }
    }
    append_power(out, graph.index(name), exponent);
  }
  return out;
}

std::string format_word(const DefiningGraph& graph, const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ' ';
    out += graph.name(word[i].vertex());
    if (word[i].inverse()) out += "^-1";
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inv());
  return out;
}

Word power_word(const Word& w, int n) {
  const Word base = n >= 0 ? w : inverse_word(w);
  Word out;
  out.reserve(base.size() * static_cast<std::size_t>(std::abs(n)));
  for (int i = 0; i < std::abs(n); ++i) out.insert(out.end(), base.begin(), base.end());
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

Word reduce(const DefiningGraph& graph, const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    bool cancelled = false;
    for (std::size_t i = out.size(); i-- > 0;) {
      Letter y = out[i];
      if (y.vertex() == x.vertex()) {
        if (y == x.inv()) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          cancelled = true;
        }
        break;
      }
      if (!graph.adjacent(x, y)) break;
    }
    if (!cancelled) out.push_back(x);
  }
  return out;
}

Word shortlex_shuffle(const DefiningGraph& graph, const Word& reduced) {
  const std::size_t n = reduced.size();
  // blockers[j]: number of not-yet-emitted letters before j that j cannot pass.
  std::vector<int> blockers(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (!graph.adjacent(reduced[i], reduced[j])) ++blockers[j];

  std::vector<bool> used(n, false);
  Word out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || blockers[j] != 0) continue;
      if (best == n || reduced[j] < reduced[best]) best = j;
    }
    used[best] = true;
    out.push_back(reduced[best]);
    for (std::size_t k = best + 1; k < n; ++k)
      if (!used[k] && !graph.adjacent(reduced[best], reduced[k])) --blockers[k];
  }
  return out;
}

NormalForm normal_form(const DefiningGraph& graph, const Word& w) {
  for (Letter x : w)
    if (static_cast<std::size_t>(x.vertex()) >= graph.size())
      throw InputError("letter outside the defining graph");
  return NormalForm::from_canonical(shortlex_shuffle(graph, reduce(graph, w)));
}

NormalForm parse_element(const DefiningGraph& graph, std::string_view text) {
  return normal_form(graph, parse_word(graph, text));
}

NormalForm multiply(const DefiningGraph& graph, const NormalForm& u, const NormalForm& v) {
  Word w = u.letters();
  w.insert(w.end(), v.letters().begin(), v.letters().end());
  return normal_form(graph, w);
}

NormalForm multiply(const DefiningGraph& graph, std::initializer_list<NormalForm> factors) {
  Word w;
  for (const auto& f : factors) w.insert(w.end(), f.letters().begin(), f.letters().end());
  return normal_form(graph, w);
}

NormalForm invert(const DefiningGraph& graph, const NormalForm& u) {
  return normal_form(graph, inverse_word(u.letters()));
}

NormalForm conjugate(const DefiningGraph& graph, const NormalForm& g, const NormalForm& x) {
  Word w = g.letters();
  w.insert(w.end(), x.letters().begin(), x.letters().end());
  Word gi = inverse_word(g.letters());
  w.insert(w.end(), gi.begin(), gi.end());
  return normal_form(graph, w);
}

NormalForm power(const DefiningGraph& graph, const NormalForm& g, int n) {
  return normal_form(graph, power_word(g.letters(), n));
}

std::vector<std::size_t> first_letters(const DefiningGraph& graph, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool free = true;
    for (std::size_t i = 0; i < j && free; ++i) free = graph.adjacent(w[i], w[j]);
    if (free) out.push_back(j);
  }
  return out;
}

std::vector<std::size_t> last_letters(const DefiningGraph& graph, const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < w.size(); ++j) {
    bool free = true;
    for (std::size_t i = j + 1; i < w.size() && free; ++i) free = graph.adjacent(w[i], w[j]);
    if (free) out.push_back(j);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cyclic reduction and the rotation closure

namespace {

Word erase_positions(const Word& w, std::size_t i, std::size_t j) {
  Word out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    if (k != i && k != j) out.push_back(w[k]);
  return out;
}

// Least letter x that can move to the front while x^-1 can move to the back.
bool find_cyclic_cancellation(const DefiningGraph& graph, const Word& w, std::size_t& front,
                              std::size_t& back) {
  auto firsts = first_letters(graph, w);
  auto lasts = last_letters(graph, w);
  bool found = false;
  for (std::size_t f : firsts) {
    for (std::size_t l : lasts) {
      if (f == l || w[l] != w[f].inv()) continue;
      if (!found || w[f] < w[front]) {
        front = f;
        back = l;
        found = true;
      }
    }
  }
  return found;
}

}  // namespace

std::pair<NormalForm, NormalForm> cyclic_reduction(const DefiningGraph& graph,
                                                   const NormalForm& g) {
  Word w = g.letters();
  Word prefix;
  std::size_t front = 0;
  std::size_t back = 0;
  while (find_cyclic_cancellation(graph, w, front, back)) {
    prefix.push_back(w[front]);
    w = erase_positions(w, front, back);
  }
  return {normal_form(graph, prefix), normal_form(graph, w)};
}

bool is_cyclically_reduced(const DefiningGraph& graph, const NormalForm& g) {
  std::size_t f = 0;
  std::size_t b = 0;
  return !find_cyclic_cancellation(graph, g.letters(), f, b);
}

std::vector<RotationState> rotation_closure(const DefiningGraph& graph, const NormalForm& core,
                                            std::size_t budget) {
  std::vector<RotationState> states{{core, NormalForm{}}};
  std::unordered_set<Word, WordHash> seen{core.letters()};
  for (std::size_t head = 0; head < states.size(); ++head) {
    const Word current = states[head].element.letters();
    const NormalForm rotation = states[head].rotation;
    std::vector<Letter> tried;
    for (std::size_t pos : first_letters(graph, current)) {
      Letter x = current[pos];
      if (std::find(tried.begin(), tried.end(), x) != tried.end()) continue;
      tried.push_back(x);
      Word rotated;
      rotated.reserve(current.size());
      for (std::size_t k = 0; k < current.size(); ++k)
        if (k != pos) rotated.push_back(current[k]);
      rotated.push_back(x);
      Word canonical = shortlex_shuffle(graph, rotated);
      if (!seen.insert(canonical).second) continue;
      if (seen.size() > budget)
        throw BudgetError("rotation closure exceeded budget of " + std::to_string(budget));
      Word r = rotation.letters();
      r.push_back(x);
      states.push_back({NormalForm::from_canonical(std::move(canonical)), normal_form(graph, r)});
    }
  }
  return states;
}

CyclicForm cyclic_form(const DefiningGraph& graph, const NormalForm& g, std::size_t budget) {
  auto [prefix, core] = cyclic_reduction(graph, g);
  auto closure = rotation_closure(graph, core, budget);
  NormalForm best = closure.front().element;
  for (const auto& s : closure)
    if (s.element < best) best = s.element;
  return {prefix, core, best};
}

// ---------------------------------------------------------------------------
// Supports, links and joins

VertexSet support(const NormalForm& g) {
  VertexSet s;
  for (Letter x : g.letters()) s.insert(x.vertex());
  return s;
}

VertexSet link(VertexSet s, const DefiningGraph& graph) {
  VertexSet out = graph.all();
  for (int v : s.members()) out = out & graph.neighbours(v);
  return out;
}

VertexSet star(VertexSet s, const DefiningGraph& graph) { return s | link(s, graph); }

std::vector<VertexSet> join_factors(VertexSet s, const DefiningGraph& graph) {
  std::vector<VertexSet> blocks;
  VertexSet unvisited = s;
  while (!unvisited.empty()) {
    int start = unvisited.members().front();
    VertexSet block = VertexSet::single(start);
    unvisited.erase(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : unvisited.members()) {
        if (!graph.adjacent(u, v)) {
          block.insert(v);
          unvisited.erase(v);
          stack.push_back(v);
        }
      }
    }
    blocks.push_back(block);
  }
  return blocks;
}

Word restrict_word(const Word& w, VertexSet s) {
  Word out;
  for (Letter x : w)
    if (s.contains(x.vertex())) out.push_back(x);
  return out;
}

std::pair<NormalForm, int> root_of(const DefiningGraph& graph, const NormalForm& g) {
  if (g.is_identity()) throw InputError("the identity has no root");
  auto [prefix, core] = cyclic_reduction(graph, g);
  const Word& c = core.letters();
  const std::size_t len = c.size();
  for (std::size_t n = len; n >= 2; --n) {
    if (len % n != 0) continue;
    const std::size_t d = len / n;
    // Trace prefixes of length d, deduplicated by normal form.
    std::unordered_set<Word, WordHash> seen;
    NormalForm found;
    bool ok = false;
    std::function<void(const Word&, const Word&)> walk = [&](const Word& taken, const Word& rest) {
      if (ok) return;
      if (taken.size() == d) {
        Word canon = shortlex_shuffle(graph, taken);
        if (!seen.insert(canon).second) return;
        NormalForm r = NormalForm::from_canonical(canon);
        if (power(graph, r, static_cast<int>(n)) == core) {
          found = r;
          ok = true;
        }
        return;
      }
      std::vector<Letter> tried;
      for (std::size_t pos : first_letters(graph, rest)) {
        if (std::find(tried.begin(), tried.end(), rest[pos]) != tried.end()) continue;
        tried.push_back(rest[pos]);
        Word t = taken;
        t.push_back(rest[pos]);
        Word r = rest;
        r.erase(r.begin() + static_cast<std::ptrdiff_t>(pos));
        walk(t, r);
      }
    };
    walk({}, c);
    if (ok) return {conjugate(graph, prefix, found), static_cast<int>(n)};
  }
  return {g, 1};
}

std::string format_vertex_set(const DefiningGraph& graph, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += graph.name(v);
    first = false;
  }
  return out + "}";
}

VertexSet parse_vertex_set(const DefiningGraph& graph, const std::vector<std::string>& names) {
  VertexSet s;
  for (const auto& n : names) s.insert(graph.index(n));
  return s;
}

}  // namespace conjlab
