#pragma once

// Conjugacy in A_Gamma: exact decision, centralizer generators, greedy
// conjugator shortening and linear-bound conjugator search.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "conjlab/cayley.hpp"
#include "conjlab/raag.hpp"

namespace conjlab {

bool are_conjugate(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                   std::size_t budget = kDefaultClosureBudget);

// g a g^-1 == b
bool is_conjugator(const DefiningGraph& graph, const NormalForm& g, const NormalForm& a,
                   const NormalForm& b);

struct CentralizerGenerators {
  NormalForm owner;
  std::vector<NormalForm> generators;
};

// With b = q.core.q^-1: q r^{+-1} q^-1 for the primitive root r of each join
// factor of the core, and q s^{+-1} q^-1 for s in lk(supp(core)).
CentralizerGenerators centralizer_generators(const DefiningGraph& graph, const NormalForm& b);

// Greedy descent g <- z.g over centralizer generators of b while |g| drops.
NormalForm shorten_conjugator(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                              const NormalForm& g);

// Conjugator assembled from cyclic prefixes and the rotation path between
// canonical cores, before shortening. Requires are_conjugate(a, b).
NormalForm initial_conjugator(const DefiningGraph& graph, const NormalForm& a, const NormalForm& b,
                              std::size_t budget = kDefaultClosureBudget);

struct ConjugacyCertificate {
  NormalForm a;
  NormalForm b;
  bool conjugate = false;
  NormalForm conjugator;
  bool valid = false;
  double bound_k = 0.0;
  double bound_c = 0.0;
  bool within_bound = false;
  std::size_t pipeline_length = 0;  // after shortening, before any exhaustive search
  bool used_fallback = false;
};

struct FindOptions {
  // Run the exhaustive search even when the pipeline already meets the bound,
  // so the certificate carries a minimal conjugator.
  bool minimize = false;
  std::size_t closure_budget = kDefaultClosureBudget;
  std::size_t element_budget = kDefaultElementBudget;
};

ConjugacyCertificate find_conjugator(const DefiningGraph& graph, const NormalForm& a,
                                     const NormalForm& b, double bound_k, double bound_c,
                                     const FindOptions& options = {});

// Random words: uniform letters, rejecting immediate cancellation.
Word random_reduced_word(const DefiningGraph& graph, std::size_t length, std::mt19937_64& rng);
// Non-trivial cyclically reduced element of length <= max_length.
NormalForm random_cyclic_core(const DefiningGraph& graph, std::size_t max_length,
                              std::mt19937_64& rng);
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

struct ClfConfig {
  std::size_t samples = 500;
  std::size_t max_core_len = 6;
  std::size_t max_twist_len = 6;
  std::uint64_t seed = 7;
  double bound_k = 2.0;
  double bound_c = 0.0;
  std::size_t closure_budget = kDefaultClosureBudget;
  std::size_t element_budget = kDefaultElementBudget;
};

struct ClfRow {
  std::size_t trial = 0;
  std::size_t len_a = 0;
  std::size_t len_b = 0;
  std::size_t min_conj_len = 0;
  std::size_t pipeline_conj_len = 0;
  bool big_maximal = false;
  std::uint64_t seed = 0;
  NormalForm a;
  NormalForm b;
  NormalForm twist;
  NormalForm min_conjugator;
};

struct ClfResult {
  std::vector<ClfRow> rows;
  std::vector<std::string> skipped;  // "trial N: reason"
};

ClfResult clf_experiment(const DefiningGraph& graph, const ClfConfig& config);

// Least C with min_conj_len <= k (|a| + |b|) + C on every row (0 if none).
double fit_additive_constant(const std::vector<ClfRow>& rows, double k);

// CSV with "# key=value" metadata lines followed by the mandatory header.
void write_clf_csv(std::ostream& out, const ClfResult& result,
                   const std::vector<std::pair<std::string, std::string>>& metadata);

}  // namespace conjlab
