#include "conjlab/conjugator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "conjlab/domains.hpp"
#include "conjlab/errors.hpp"

namespace conjlab {

bool are_conjugate(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                   std::size_t budget) {
  if (a == b) return true;
  const auto [pa, ca] = cyclic_reduction(graph, a);
  const auto [pb, cb] = cyclic_reduction(graph, b);
  if (ca.length() != cb.length()) return false;
  return cyclic_form(graph, a, budget).canonical_core == cyclic_form(graph, b, budget).canonical_core;
}

bool is_conjugator(const DefiningGraph& graph, const NormalForm& g, const NormalForm& a,
                   const NormalForm& b) {
  return multiply(graph, g, a) == multiply(graph, b, g);
}

CentralizerGenerators centralizer_generators(const DefiningGraph& graph, const NormalForm& b) {
  CentralizerGenerators out;
  out.owner = b;
  if (b.is_identity()) throw InputError("centralizer of the identity is the whole group");
  const auto [q, core] = cyclic_reduction(graph, b);
  const VertexSet s = support(core);
  auto add = [&](const NormalForm& z) {
    for (int sign : {1, -1}) {
      NormalForm g = conjugate(graph, q, sign > 0 ? z : invert(graph, z));
      if (std::find(out.generators.begin(), out.generators.end(), g) == out.generators.end())
        out.generators.push_back(std::move(g));
    }
  };
  for (VertexSet block : join_factors(s, graph)) {
    const NormalForm factor = normal_form(graph, restrict_word(core.letters(), block));
    add(root_of(graph, factor).first);
  }
  for (int v : link(s, graph).members())
    add(NormalForm::from_canonical(Word{Letter::make(v)}));
  for (const auto& z : out.generators)
    if (!(multiply(graph, z, b) == multiply(graph, b, z)))
      throw std::logic_error("centralizer generator does not commute with its owner");
  return out;
}

NormalForm shorten_conjugator(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                              const NormalForm& g) {
  if (!is_conjugator(graph, g, a, b)) throw InputError("shorten_conjugator: g a g^-1 != b");
  if (b.is_identity()) return NormalForm{};
  const auto gens = centralizer_generators(graph, b).generators;
  NormalForm current = g;
  for (;;) {
    NormalForm best = current;
    for (const auto& z : gens) {
      NormalForm candidate = multiply(graph, z, current);
      if (candidate.length() < best.length()) best = std::move(candidate);
    }
    if (best.length() >= current.length()) break;
    current = std::move(best);
  }
  return current;
}

namespace {

// r with r^-1 core r == target, found along the rotation closure.
NormalForm rotation_to(const DefiningGraph& graph, const NormalForm& core, const NormalForm& target,
                       std::size_t budget) {
  for (const auto& s : rotation_closure(graph, core, budget))
    if (s.element == target) return s.rotation;
  throw std::logic_error("canonical core missing from its rotation closure");
}

}  // namespace

NormalForm initial_conjugator(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                              std::size_t budget) {
  const CyclicForm fa = cyclic_form(graph, a, budget);
  const CyclicForm fb = cyclic_form(graph, b, budget);
  if (!(fa.canonical_core == fb.canonical_core)) throw InputError("elements are not conjugate");
  const NormalForm ra = rotation_to(graph, fa.core, fa.canonical_core, budget);
  const NormalForm rb = rotation_to(graph, fb.core, fb.canonical_core, budget);
  return multiply(graph, {fb.prefix, rb, invert(graph, ra), invert(graph, fa.prefix)});
}

ConjugacyCertificate find_conjugator(const DefiningGraph& graph, const NormalForm& a,
                                     const NormalForm& b, double bound_k, double bound_c,
                                     const FindOptions& options) {
  ConjugacyCertificate cert;
  cert.a = a;
  cert.b = b;
  cert.bound_k = bound_k;
  cert.bound_c = bound_c;
  cert.conjugate = are_conjugate(graph, a, b, options.closure_budget);
  if (!cert.conjugate) return cert;

  NormalForm g = a == b ? NormalForm{} : initial_conjugator(graph, a, b, options.closure_budget);
  g = shorten_conjugator(graph, a, b, g);
  cert.pipeline_length = g.length();

  const double bound = bound_k * static_cast<double>(a.length() + b.length()) + bound_c;
  const bool over = static_cast<double>(g.length()) > bound;
  if (over || options.minimize) {
    int radius = static_cast<int>(g.length());
    if (over && !options.minimize) radius = static_cast<int>(std::floor(bound));
    if (auto shorter = shortest_conjugator_bruteforce(graph, a, b, radius, options.element_budget)) {
      if (shorter->length() < g.length() || (shorter->length() == g.length() && *shorter < g)) {
        g = *shorter;
        cert.used_fallback = true;
      }
    }
  }
  cert.conjugator = g;
  cert.valid = is_conjugator(graph, g, a, b);
  cert.within_bound = static_cast<double>(g.length()) <= bound;
  return cert;
}

// ---------------------------------------------------------------------------
// Experiment

Word random_reduced_word(const DefiningGraph& graph, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(2 * graph.size()) - 1);
  Word w;
  while (w.size() < length) {
    Letter x{static_cast<std::uint16_t>(pick(rng))};
    if (!w.empty() && w.back() == x.inv()) continue;
    w.push_back(x);
  }
  return w;
}

NormalForm random_cyclic_core(const DefiningGraph& graph, std::size_t max_length,
                              std::mt19937_64& rng) {
  if (max_length == 0 || graph.size() == 0) throw InputError("core length must be positive");
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  for (;;) {
    const NormalForm g = normal_form(graph, random_reduced_word(graph, len(rng), rng));
    NormalForm core = cyclic_reduction(graph, g).second;
    if (!core.is_identity()) return core;
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

ClfResult clf_experiment(const DefiningGraph& graph, const ClfConfig& config) {
  ClfResult result;
  if (config.samples == 0) return result;
  if (config.max_core_len == 0) throw InputError("max_core_len must be positive");
  const Ball ball =
      enumerate_ball(graph, static_cast<int>(config.max_twist_len), config.element_budget);

  for (std::size_t trial = 0; trial < config.samples; ++trial) {
    auto rng = trial_rng(config.seed, trial);
    try {
      ClfRow row;
      row.trial = trial;
      row.seed = config.seed;
      row.a = random_cyclic_core(graph, config.max_core_len, rng);
      std::uniform_int_distribution<std::size_t> tlen(0, config.max_twist_len);
      row.twist = normal_form(graph, random_reduced_word(graph, tlen(rng), rng));
      row.b = conjugate(graph, row.twist, row.a);
      row.len_a = row.a.length();
      row.len_b = row.b.length();
      auto gmin = shortest_conjugator_bruteforce(ball, row.a, row.b,
                                                 static_cast<int>(row.twist.length()));
      if (!gmin) throw std::logic_error("twist failed to conjugate");
      row.min_conjugator = *gmin;
      row.min_conj_len = gmin->length();
      FindOptions opts;
      opts.closure_budget = config.closure_budget;
      opts.element_budget = config.element_budget;
      const NormalForm g0 =
          row.a == row.b ? NormalForm{} : initial_conjugator(graph, row.a, row.b, opts.closure_budget);
      row.pipeline_conj_len = shorten_conjugator(graph, row.a, row.b, g0).length();
      row.big_maximal = big(graph, row.b).maximal;
      result.rows.push_back(std::move(row));
    } catch (const BudgetError& e) {
      result.skipped.push_back("trial " + std::to_string(trial) + ": " + e.what());
    }
  }
  return result;
}

double fit_additive_constant(const std::vector<ClfRow>& rows, double k) {
  double c = 0.0;
  for (const auto& r : rows)
    c = std::max(c, static_cast<double>(r.min_conj_len) -
                        k * static_cast<double>(r.len_a + r.len_b));
  return c;
}

void write_clf_csv(std::ostream& out, const ClfResult& result,
                   const std::vector<std::pair<std::string, std::string>>& metadata) {
  for (const auto& [k, v] : metadata) out << "# " << k << '=' << v << '\n';
  for (const auto& s : result.skipped) out << "# skipped " << s << '\n';
  out << "trial,|a|,|b|,min_conj_len,pipeline_conj_len,big_maximal,seed\n";
  for (const auto& r : result.rows) {
    out << r.trial << ',' << r.len_a << ',' << r.len_b << ',' << r.min_conj_len << ','
        << r.pipeline_conj_len << ',' << (r.big_maximal ? 1 : 0) << ',' << r.seed << '\n';
  }
}

}  // namespace conjlab
