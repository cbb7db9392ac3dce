#include "conjlab/cayley.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "conjlab/errors.hpp"

namespace conjlab {

Piling::Piling(const DefiningGraph& graph) : graph_(&graph), columns_(graph.size()) {}

void Piling::push(Letter x) {
  const int v = x.vertex();
  auto& column = columns_[static_cast<std::size_t>(v)];
  const bool cancels = !column.empty() && column.back() == x.inv().code;
  for (int u = 0; u < static_cast<int>(columns_.size()); ++u) {
    if (u == v || graph_->adjacent(u, v)) continue;
    auto& other = columns_[static_cast<std::size_t>(u)];
    if (cancels) {
      other.pop_back();
    } else {
      other.push_back(kBlank);
    }
  }
  if (cancels) {
    column.pop_back();
  } else {
    column.push_back(x.code);
  }
}

bool Piling::is_trivial() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::string Piling::key() const {
  std::string out;
  for (const auto& column : columns_) {
    for (std::uint16_t s : column) {
      out += static_cast<char>(s == kBlank ? 0xFF : (s & 0xFF));
      out += static_cast<char>(s == kBlank ? 0xFF : (s >> 8));
    }
    out += '|';
  }
  return out;
}

std::string piling_key(const DefiningGraph& graph, const Word& w) {
  Piling p(graph);
  p.push(w);
  return p.key();
}

// ---------------------------------------------------------------------------

std::span<const NormalForm> Ball::sphere(int r) const {
  if (r < 0 || r > radius_) return {};
  std::size_t begin = r == 0 ? 0 : layer_end_[static_cast<std::size_t>(r - 1)];
  std::size_t end = layer_end_[static_cast<std::size_t>(r)];
  return std::span<const NormalForm>(elements_).subspan(begin, end - begin);
}

std::span<const NormalForm> Ball::within(int r) const {
  if (r < 0) return {};
  r = std::min(r, radius_);
  return std::span<const NormalForm>(elements_).first(layer_end_[static_cast<std::size_t>(r)]);
}

namespace {

std::vector<Letter> alphabet(const DefiningGraph& graph) {
  std::vector<Letter> out;
  for (int v = 0; v < static_cast<int>(graph.size()); ++v) {
    out.push_back(Letter::make(v, false));
    out.push_back(Letter::make(v, true));
  }
  return out;
}

}  // namespace

Ball enumerate_ball(const DefiningGraph& graph, int radius, std::size_t budget) {
  if (radius < 0) throw InputError("ball radius must be non-negative");
  Ball ball;
  ball.graph_ = graph;
  ball.radius_ = radius;
  ball.elements_.push_back(NormalForm{});
  ball.index_.emplace(Word{}, 0);
  ball.layer_end_.push_back(1);
  const auto letters = alphabet(graph);
  std::size_t begin = 0;
  for (int r = 1; r <= radius; ++r) {
    const std::size_t end = ball.elements_.size();
    std::vector<NormalForm> layer;
    for (std::size_t i = begin; i < end; ++i) {
      for (Letter x : letters) {
        Word w = ball.elements_[i].letters();
        w.push_back(x);
        NormalForm g = normal_form(graph, w);
        if (g.length() != static_cast<std::size_t>(r)) continue;
        if (ball.index_.emplace(g.letters(), 0).second) {
          layer.push_back(std::move(g));
          if (ball.index_.size() > budget)
            throw BudgetError("ball enumeration exceeded budget of " + std::to_string(budget) +
                              " elements");
        }
      }
    }
    std::sort(layer.begin(), layer.end());
    for (auto& g : layer) {
      ball.index_[g.letters()] = ball.elements_.size();
      ball.elements_.push_back(std::move(g));
    }
    ball.layer_end_.push_back(ball.elements_.size());
    begin = end;
  }
  return ball;
}

std::unordered_map<std::string, int> bfs_distances(const DefiningGraph& graph, int radius,
                                                   std::size_t budget) {
  std::unordered_map<std::string, int> dist;
  std::deque<Word> queue{Word{}};
  dist.emplace(piling_key(graph, {}), 0);
  const auto letters = alphabet(graph);
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    const int d = dist.at(piling_key(graph, w));
    if (d == radius) continue;
    for (Letter x : letters) {
      Word next = w;
      next.push_back(x);
      if (dist.emplace(piling_key(graph, next), d + 1).second) {
        if (dist.size() > budget) throw BudgetError("BFS exceeded element budget");
        queue.push_back(std::move(next));
      }
    }
  }
  return dist;
}

NearestPoint nearest_in_set(const DefiningGraph& graph, const NormalForm& x,
                            std::span<const NormalForm> set) {
  if (set.empty()) throw InputError("nearest_in_set: empty target set");
  NearestPoint best{set.front(), word_distance(graph, set.front(), x), true};
  for (std::size_t i = 1; i < set.size(); ++i) {
    const std::size_t d = word_distance(graph, set[i], x);
    if (d < best.distance) {
      best = {set[i], d, true};
    } else if (d == best.distance && !(set[i] == best.element)) {
      best.unique = false;
      if (set[i] < best.element) best.element = set[i];
    }
  }
  return best;
}

namespace {

bool conjugates(const DefiningGraph& graph, const NormalForm& g, const NormalForm& a,
                const NormalForm& b) {
  return multiply(graph, g, a) == multiply(graph, b, g);
}

}  // namespace

std::optional<NormalForm> shortest_conjugator_bruteforce(const DefiningGraph& graph,
                                                         const NormalForm& a, const NormalForm& b,
                                                         int r_max, std::size_t budget) {
  if (r_max < 0) return std::nullopt;
  if (conjugates(graph, NormalForm{}, a, b)) return NormalForm{};
  // Layer-by-layer so that a short conjugator ends the search early.
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<NormalForm> layer{NormalForm{}};
  const auto letters = alphabet(graph);
  for (int r = 1; r <= r_max; ++r) {
    std::vector<NormalForm> next;
    for (const auto& g : layer) {
      for (Letter x : letters) {
        Word w = g.letters();
        w.push_back(x);
        NormalForm h = normal_form(graph, w);
        if (h.length() != static_cast<std::size_t>(r)) continue;
        if (seen.insert(h.letters()).second) {
          if (seen.size() > budget)
            throw BudgetError("conjugator search exceeded budget of " + std::to_string(budget) +
                              " elements");
          next.push_back(std::move(h));
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (const auto& g : next)
      if (conjugates(graph, g, a, b)) return g;
    layer = std::move(next);
  }
  return std::nullopt;
}

std::optional<NormalForm> shortest_conjugator_bruteforce(const Ball& ball, const NormalForm& a,
                                                         const NormalForm& b, int r_max) {
  for (const auto& g : ball.within(r_max))
    if (conjugates(ball.graph(), g, a, b)) return g;
  return std::nullopt;
}

std::size_t free_group_ball_size(int rank, int radius) {
  std::size_t total = 1;
  std::size_t sphere = 2 * static_cast<std::size_t>(rank);
  for (int r = 1; r <= radius; ++r) {
    total += sphere;
    sphere *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

std::size_t free_abelian2_ball_size(int radius) {
  const auto r = static_cast<std::size_t>(radius);
  return 2 * r * r + 2 * r + 1;
}

}  // namespace conjlab
