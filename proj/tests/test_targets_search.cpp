#include <gtest/gtest.h>

#include <random>

#include "lcgl2/prime_search.hpp"
#include "lcgl2/target_builder.hpp"
#include "support.hpp"

using namespace lcgl2;

TEST(Targets, CongruencesAndDivisibility) {
  for (unsigned long p : {5UL, 7UL, 11UL}) {
    const CongruenceTarget t = build_targets(build_bundle(p));
    const Integer pr = pow_ui(p, static_cast<unsigned long>(t.r));
    EXPECT_EQ(t.r, 4 * static_cast<int>(p) + 1);
    EXPECT_EQ(t.modulus, 64 * pr);
    EXPECT_EQ(mod(t.s1, 64), 1);
    EXPECT_EQ(mod(t.s2, 64), 17);
    EXPECT_EQ(mod(t.a0_residue, 64), 0);
    EXPECT_EQ(mod(t.s1 - (t.xpp[1] - t.xpp[0]), pr), 0);
    EXPECT_EQ(mod(t.s2 - (t.xpp[2] - t.xpp[0]), pr), 0);
    EXPECT_EQ(mod(t.a0_residue - t.xpp[0], pr), 0);
    EXPECT_TRUE(divides(16 * pow_ui(p, p), t.s1 - t.s2));
    EXPECT_EQ(mod_ui(t.q3_constant, p), 1u);
    EXPECT_GE(t.s1, 0);
    EXPECT_LT(t.s1, t.modulus);
  }
}

TEST(Targets, FormIdentity) {
  std::mt19937_64 rng(1);
  for (unsigned long p : {5UL, 7UL}) {
    const CongruenceTarget t = build_targets(build_bundle(p));
    const LinearFormTriple f = linear_forms(t);
    EXPECT_TRUE(pairwise_independent(f));
    EXPECT_TRUE(admissible(f, p));
    const Integer k = 16 * pow_ui(p, p);
    for (int i = 0; i < 200; ++i) {
      const Integer x = test_support::random_integer(rng, -1000000, 1000000);
      const Integer y = test_support::random_integer(rng, -1000000, 1000000);
      ASSERT_EQ(f.q1(x, y) - f.q2(x, y), k * f.q3(x, y));
      ASSERT_EQ(mod_ui(f.q1(x, y), p), 1u);
      ASSERT_EQ(mod_ui(f.q2(x, y), p), 1u);
      ASSERT_EQ(mod_ui(f.q3(x, y), p), 1u);
    }
  }
}

TEST(Targets, DegenerateFormsDetected) {
  LinearFormTriple f{{1, 2, 3}, {5, 4, 6}, {1, 1, 0}};
  EXPECT_FALSE(pairwise_independent(f));
  LinearFormTriple g{{2, 4, 0}, {1, 0, 4}, {1, 1, -1}};
  EXPECT_FALSE(admissible(g, 5));
}

TEST(Targets, AssembleCurve) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  const CurveTriple c = assemble_curve(t, 3, 1);
  EXPECT_EQ(c.b0 - c.a0, c.q1);
  EXPECT_EQ(c.c0 - c.a0, c.q2);
  EXPECT_EQ(c.b0 - c.c0, 16 * pow_ui(5, 5) * c.q3);
  EXPECT_THROW(assemble_curve(t, -5, 0), PreconditionError);
}

TEST(Sieve, MarksExactlyTheDivisibleValues) {
  const auto primes = primes_up_to(50);
  const Integer c = 1000003, a = 6;
  const auto alive = sieve_window(c, a, 7, 500, primes);
  for (std::size_t i = 0; i < alive.size(); ++i) {
    const Integer v = c + a * Integer(7 + static_cast<long>(i));
    bool divisible = false;
    for (auto q : primes) divisible = divisible || (divides(Integer(q), v) && v != q);
    EXPECT_EQ(alive[i] == 0, divisible) << v;
  }
}

TEST(Sieve, SmallPrimeValuesSurvive) {
  const auto primes = primes_up_to(50);
  const auto alive = sieve_window(1, 2, 0, 10, primes);  // 1, 3, 5, ..., 19
  EXPECT_TRUE(alive[1]);
  EXPECT_TRUE(alive[2]);
  EXPECT_TRUE(alive[9]);
  EXPECT_TRUE(alive[4]);  // 9 <= largest sieving prime: left for is_prime
}

// Q1 is odd by construction; the sieve must never reject a candidate for parity.
TEST(Sieve, ParitySelfCheck) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  const LinearFormTriple f = linear_forms(t);
  const std::vector<unsigned long> two{2};
  const auto alive = sieve_window(f.q1.constant, f.q1.cx, 0, 1000, two);
  for (char a : alive) EXPECT_TRUE(a);
  const auto even = sieve_window(f.q1.constant + 1, f.q1.cx, 0, 1000, two);
  for (char a : even) EXPECT_FALSE(a);
}

TEST(Search, FindsAllPrimeTriple) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  const LinearFormTriple f = linear_forms(t);
  const SearchResult r = search(f, t, SearchConfig{});
  ASSERT_EQ(r.stop, SearchStop::found);
  ASSERT_TRUE(r.solution);
  const auto& s = *r.solution;
  const Integer q1 = f.q1(s.x0, s.y0), q2 = f.q2(s.x0, s.y0), q3 = f.q3(s.x0, s.y0);
  EXPECT_TRUE(is_prime(q1).passes());
  EXPECT_TRUE(is_prime(q2).passes());
  EXPECT_TRUE(is_prime(q3).passes());
  EXPECT_EQ(s.evidence[0].n, q1);
  EXPECT_EQ(s.evidence[1].n, q2);
  EXPECT_EQ(s.evidence[2].n, q3);
  EXPECT_GT(q1, pow_ui(10, 16));
  EXPECT_LE(r.stats.tests, SearchConfig{}.budget);
}

TEST(Search, ZeroBudget) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  SearchConfig cfg;
  cfg.budget = 0;
  const SearchResult r = search(linear_forms(t), t, cfg);
  EXPECT_EQ(r.stop, SearchStop::budget_exhausted);
  EXPECT_FALSE(r.solution);
  EXPECT_EQ(r.stats.tests, 0u);
}

TEST(Search, TinyBudgetIsRespected) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  SearchConfig cfg;
  cfg.budget = 5;
  const SearchResult r = search(linear_forms(t), t, cfg);
  EXPECT_EQ(r.stop, SearchStop::budget_exhausted);
  EXPECT_LE(r.stats.tests, 5u);
}

TEST(Search, RangeExhaustion) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  SearchConfig cfg;
  cfg.d_range = 1;
  cfg.x_window = 1;
  const SearchResult r = search(linear_forms(t), t, cfg);
  if (!r.solution) {
    EXPECT_EQ(r.stop, SearchStop::range_exhausted);
  }
}

TEST(Search, DeterministicAcrossWorkerCounts) {
  for (unsigned long p : {5UL, 7UL}) {
    const CongruenceTarget t = build_targets(build_bundle(p));
    const LinearFormTriple f = linear_forms(t);
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
      SearchConfig cfg;
      cfg.seed = seed;
      const SearchResult base = search(f, t, cfg);
      ASSERT_TRUE(base.solution);
      for (unsigned w : {2u, 3u, 8u}) {
        cfg.workers = w;
        const SearchResult r = search(f, t, cfg);
        ASSERT_TRUE(r.solution);
        EXPECT_EQ(r.solution->x0, base.solution->x0);
        EXPECT_EQ(r.solution->y0, base.solution->y0);
        EXPECT_EQ(r.solution->stream_index, base.solution->stream_index);
        EXPECT_EQ(r.stats.tests, base.stats.tests);
      }
    }
  }
}

TEST(Search, SeedsChangeTheStream) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  const LinearFormTriple f = linear_forms(t);
  SearchConfig a, b;
  a.seed = 1;
  b.seed = 2;
  const auto ra = search(f, t, a), rb = search(f, t, b);
  ASSERT_TRUE(ra.solution && rb.solution);
  EXPECT_NE(ra.solution->x0 - ra.solution->y0, rb.solution->x0 - rb.solution->y0);
}

TEST(Search, RejectsUnexpectedForms) {
  const CongruenceTarget t = build_targets(build_bundle(5));
  LinearFormTriple f = linear_forms(t);
  f.q3.cy = 0;
  EXPECT_THROW(search(f, t, SearchConfig{}), PreconditionError);
}
