#include "conjlab/domains.hpp"

#include <algorithm>
#include <set>

#include "conjlab/cayley.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

Word parabolic_prefix(const DefiningGraph& graph, const Word& w, VertexSet s) {
  Word rest = w;
  Word prefix;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (!s.contains(rest[j].vertex())) continue;
      bool front = true;
      for (std::size_t i = 0; i < j && front; ++i) front = graph.adjacent(rest[i], rest[j]);
      if (!front) continue;
      prefix.push_back(rest[j]);
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      changed = true;
      break;
    }
  }
  return prefix;
}

Gate gate(const DefiningGraph& graph, const NormalForm& x, const Coset& target) {
  const NormalForm w = multiply(graph, invert(graph, target.rep), x);
  const Word p = parabolic_prefix(graph, w.letters(), target.delta);
  Word g = target.rep.letters();
  g.insert(g.end(), p.begin(), p.end());
  return {normal_form(graph, g), w.length() - p.size()};
}

bool in_double_coset(const DefiningGraph& graph, const NormalForm& x, VertexSet left,
                     VertexSet right) {
  const Word p = parabolic_prefix(graph, x.letters(), left);
  Word rest = inverse_word(p);
  rest.insert(rest.end(), x.letters().begin(), x.letters().end());
  return support(normal_form(graph, rest)).subset_of(right);
}

bool is_irreducible(VertexSet s, const DefiningGraph& graph) {
  return !s.empty() && join_factors(s, graph).size() == 1;
}

Domain Domain::make(const DefiningGraph& graph, VertexSet delta, const NormalForm& c) {
  if (delta.empty()) throw InputError("domain with empty vertex set");
  if (!delta.subset_of(graph.all())) throw InputError("domain vertices outside the graph");
  Domain d;
  d.delta_ = delta;
  d.rep_ = gate(graph, NormalForm{}, Coset{c, star(delta, graph)}).point;
  return d;
}

Domain translate(const DefiningGraph& graph, const Domain& d, const NormalForm& h) {
  return Domain::make(graph, d.delta(), multiply(graph, h, d.rep()));
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::kEqual: return "equal";
    case Relation::kNestedIn: return "nested";
    case Relation::kContains: return "contains";
    case Relation::kOrthogonal: return "orthogonal";
    case Relation::kTransverse: return "transverse";
  }
  return "?";
}

namespace {

// Some representative of [u] lies inside some representative of [v].
bool nests(const DefiningGraph& graph, const Domain& u, const Domain& v) {
  if (!u.delta().subset_of(v.delta())) return false;
  const NormalForm x = multiply(graph, invert(graph, v.rep()), u.rep());
  return in_double_coset(graph, x, star(v.delta(), graph), link(u.delta(), graph));
}

}  // namespace

Relation relation(const DefiningGraph& graph, const Domain& u, const Domain& v) {
  if (u == v) return Relation::kEqual;
  if (nests(graph, u, v)) return Relation::kNestedIn;
  if (nests(graph, v, u)) return Relation::kContains;
  if (u.delta().subset_of(link(v.delta(), graph))) {
    // Product regions meet, equivalently both contain a common coset of
    // A_{J u lk(J)} with J = delta_u u delta_v.
    const NormalForm x = multiply(graph, invert(graph, v.rep()), u.rep());
    if (in_double_coset(graph, x, star(v.delta(), graph), star(u.delta(), graph)))
      return Relation::kOrthogonal;
  }
  return Relation::kTransverse;
}

ProductRegion product_region(const DefiningGraph& graph, const Domain& base) {
  return {base,
          {base.rep(), base.delta()},
          {base.rep(), link(base.delta(), graph)},
          {base.rep(), star(base.delta(), graph)}};
}

BigSet big(const DefiningGraph& graph, const NormalForm& g) {
  BigSet out;
  out.owner = g;
  if (g.is_identity()) return out;
  auto [prefix, core] = cyclic_reduction(graph, g);
  out.prefix = prefix;
  const VertexSet s = support(core);
  for (VertexSet block : join_factors(s, graph)) {
    NormalForm factor = normal_form(graph, restrict_word(core.letters(), block));
    if (factor.is_identity()) continue;
    out.domains.push_back(Domain::make(graph, block, prefix));
    out.factors.push_back(std::move(factor));
  }
  out.maximal = link(s, graph).empty();
  for (const auto& d : out.domains) out.maximal = out.maximal && is_irreducible(d.delta(), graph);
  return out;
}

std::size_t domain_distance(const DefiningGraph& graph, const Domain& u, const NormalForm& x,
                            const NormalForm& y) {
  const Coset f = u.f_coset();
  return word_distance(graph, gate(graph, x, f).point, gate(graph, y, f).point);
}

std::vector<Domain> candidate_domains(const DefiningGraph& graph, const NormalForm& x,
                                      const NormalForm& y, int slack, std::size_t budget) {
  std::vector<VertexSet> deltas;
  const std::uint64_t full = graph.all().bits();
  for (std::uint64_t bits = 1; bits <= full; ++bits) {
    if ((bits & ~full) != 0) continue;
    if (is_irreducible(VertexSet(bits), graph)) deltas.push_back(VertexSet(bits));
  }
  const Ball around = enumerate_ball(graph, std::max(slack, 0), budget);
  const NormalForm path = multiply(graph, invert(graph, x), y);

  std::set<Domain> found;
  Word prefix = x.letters();
  for (std::size_t i = 0; i <= path.length(); ++i) {
    if (i > 0) prefix.push_back(path.letters()[i - 1]);
    const NormalForm base = normal_form(graph, prefix);
    for (const auto& s : around.elements()) {
      const NormalForm c = multiply(graph, base, s);
      for (VertexSet delta : deltas) {
        found.insert(Domain::make(graph, delta, c));
        if (found.size() > budget) throw BudgetError("domain scan exceeded candidate budget");
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Domain> relevant_domains(const DefiningGraph& graph, const NormalForm& x,
                                     const NormalForm& y, std::size_t threshold, int search_radius,
                                     std::size_t budget) {
  if (threshold < 1) throw InputError("relevance threshold must be at least 1");
  std::vector<Domain> out;
  if (x == y) return out;
  for (const auto& d : candidate_domains(graph, x, y, search_radius, budget))
    if (domain_distance(graph, d, x, y) >= threshold) out.push_back(d);
  return out;
}

ProductDistanceReport dist_to_product_region_check(const DefiningGraph& graph, const NormalForm& x,
                                                   const ProductRegion& region,
                                                   std::size_t threshold, int slack) {
  ProductDistanceReport report;
  const Gate g = gate(graph, x, region.region);
  report.exact = g.distance;
  report.gate = g.point;
  if (g.distance == 0) return report;
  for (const auto& y : candidate_domains(graph, x, g.point, slack)) {
    const Relation r = relation(graph, region.base, y);
    if (r != Relation::kTransverse && r != Relation::kNestedIn) continue;
    const std::size_t d = domain_distance(graph, y, x, g.point);
    if (d >= threshold) {
      report.proxy_sum += d;
      ++report.terms;
    }
  }
  if (report.proxy_sum > 0)
    report.ratio = static_cast<double>(report.exact) / static_cast<double>(report.proxy_sum);
  return report;
}

TranslationLength translation_length_group(const DefiningGraph& graph, const NormalForm& g) {
  TranslationLength out;
  const auto [prefix, core] = cyclic_reduction(graph, g);
  out.group = core.length();
  for (VertexSet block : join_factors(support(core), graph))
    out.factors.push_back(restrict_word(core.letters(), block).size());
  return out;
}

}  // namespace conjlab
