#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "conjlab/cayley.hpp"
#include "conjlab/conjugator.hpp"
#include "conjlab/errors.hpp"
#include "conjlab/raag.hpp"

namespace conjlab {
namespace {

NormalForm el(const DefiningGraph& g, const char* w) { return parse_element(g, w); }

TEST(AreConjugate, Examples) {
  const auto f = DefiningGraph::free_group(2);
  EXPECT_TRUE(are_conjugate(f, el(f, "a"), el(f, "b a b^-1")));
  EXPECT_FALSE(are_conjugate(f, el(f, "a"), el(f, "b")));
  EXPECT_FALSE(are_conjugate(f, el(f, "a"), el(f, "a^-1")));
  EXPECT_TRUE(are_conjugate(f, el(f, "a b"), el(f, "b a")));
  const auto c5 = DefiningGraph::cycle(5);
  EXPECT_TRUE(are_conjugate(c5, el(c5, "a c"), el(c5, "c a")));
  EXPECT_TRUE(are_conjugate(c5, NormalForm{}, NormalForm{}));
}

class ConjugacyOracle : public ::testing::TestWithParam<int> {};

TEST_P(ConjugacyOracle, AgreesWithBruteForceOnShortCores) {
  const auto g = GetParam() == 0 ? DefiningGraph::free_group(2) : DefiningGraph::path(3);
  const Ball ball = enumerate_ball(g, 5);
  std::vector<NormalForm> cores;
  for (const auto& x : ball.within(3))
    if (is_cyclically_reduced(g, x)) cores.push_back(x);
  for (const auto& a : cores) {
    for (const auto& b : cores) {
      if (a.length() != b.length()) continue;
      const bool brute = shortest_conjugator_bruteforce(ball, a, b, 5).has_value();
      // Cores of length <= 3 are conjugate by elements of length <= 3 when conjugate.
      EXPECT_EQ(are_conjugate(g, a, b), brute) << format_word(g, a) << " ~ " << format_word(g, b);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Graphs, ConjugacyOracle, ::testing::Values(0, 1));

TEST(Centralizer, GeneratorsCommute) {
  const auto z2 = DefiningGraph::free_abelian(2);
  const auto gens = centralizer_generators(z2, el(z2, "a")).generators;
  EXPECT_EQ(gens.size(), 4u);
  EXPECT_THROW(centralizer_generators(z2, NormalForm{}), InputError);
  const auto f = DefiningGraph::free_group(2);
  const auto fg = centralizer_generators(f, el(f, "a b a b")).generators;
  ASSERT_EQ(fg.size(), 2u);
  EXPECT_EQ(fg[0], el(f, "a b"));
}

TEST(Shorten, Examples) {
  const auto z2 = DefiningGraph::free_abelian(2);
  EXPECT_TRUE(shorten_conjugator(z2, el(z2, "a"), el(z2, "a"), el(z2, "b^5")).is_identity());
  EXPECT_THROW(shorten_conjugator(z2, el(z2, "a"), el(z2, "b"), NormalForm{}), InputError);
  const auto f = DefiningGraph::free_group(2);
  EXPECT_EQ(shorten_conjugator(f, el(f, "a"), el(f, "b a b^-1"), el(f, "b a a a")), el(f, "b"));
}

TEST(Shorten, InflatedConjugatorsShrink) {
  const auto c5 = DefiningGraph::cycle(5);
  const Ball ball = enumerate_ball(c5, 4);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 60; ++i) {
    const NormalForm a = random_cyclic_core(c5, 4, rng);
    const NormalForm t = normal_form(c5, random_reduced_word(c5, 3, rng));
    const NormalForm b = conjugate(c5, t, a);
    const NormalForm gmin = *shortest_conjugator_bruteforce(ball, a, b, 3);
    const auto gens = centralizer_generators(c5, b).generators;
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    const NormalForm g = multiply(c5, {gens[pick(rng)], gens[pick(rng)], gmin});
    const NormalForm s = shorten_conjugator(c5, a, b, g);
    EXPECT_TRUE(is_conjugator(c5, s, a, b));
    EXPECT_LE(s.length(), g.length());
  }
}

TEST(FindConjugator, CertificatesAreValidAndMinimalWhenAsked) {
  const auto p3 = DefiningGraph::path(3);
  std::mt19937_64 rng(41);
  for (int i = 0; i < 40; ++i) {
    const NormalForm a = random_cyclic_core(p3, 5, rng);
    const NormalForm t = normal_form(p3, random_reduced_word(p3, 4, rng));
    const NormalForm b = conjugate(p3, t, a);
    FindOptions opts;
    opts.minimize = true;
    const auto cert = find_conjugator(p3, a, b, 2.0, 0.0, opts);
    ASSERT_TRUE(cert.conjugate);
    EXPECT_TRUE(cert.valid);
    const auto brute = shortest_conjugator_bruteforce(p3, a, b, static_cast<int>(t.length()));
    ASSERT_TRUE(brute.has_value());
    EXPECT_EQ(cert.conjugator.length(), brute->length());
    EXPECT_TRUE(is_conjugator(p3, initial_conjugator(p3, a, b), a, b));
  }
  const auto f = DefiningGraph::free_group(2);
  EXPECT_FALSE(find_conjugator(f, el(f, "a"), el(f, "b"), 2.0, 0.0).conjugate);
}

TEST(ClfExperiment, EmptyRunWritesHeaderOnly) {
  ClfConfig cfg;
  cfg.samples = 0;
  const auto res = clf_experiment(DefiningGraph::cycle(5), cfg);
  std::ostringstream out;
  write_clf_csv(out, res, {});
  EXPECT_EQ(out.str(), "trial,|a|,|b|,min_conj_len,pipeline_conj_len,big_maximal,seed\n");
}

TEST(ClfExperiment, DeterministicAndConsistent) {
  ClfConfig cfg;
  cfg.samples = 25;
  cfg.max_twist_len = 4;
  cfg.seed = 99;
  const auto g = DefiningGraph::path(3);
  const auto r1 = clf_experiment(g, cfg);
  const auto r2 = clf_experiment(g, cfg);
  std::ostringstream o1, o2;
  write_clf_csv(o1, r1, {{"seed", "99"}});
  write_clf_csv(o2, r2, {{"seed", "99"}});
  EXPECT_EQ(o1.str(), o2.str());
  ASSERT_EQ(r1.rows.size(), 25u);
  for (const auto& row : r1.rows) {
    EXPECT_TRUE(is_conjugator(g, row.min_conjugator, row.a, row.b));
    EXPECT_LE(row.min_conj_len, row.twist.length());
    EXPECT_GE(row.pipeline_conj_len, row.min_conj_len);
  }
  const double c = fit_additive_constant(r1.rows, 2.0);
  for (const auto& row : r1.rows)
    EXPECT_LE(static_cast<double>(row.min_conj_len), 2.0 * (row.len_a + row.len_b) + c);
}

}  // namespace
}  // namespace conjlab
