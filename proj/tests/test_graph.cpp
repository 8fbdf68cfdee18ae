#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "periodlab/graph.hpp"
#include "periodlab/kernels.hpp"
#include "periodlab/numeric.hpp"

using namespace periodlab;

TEST_CASE("mobius and divisors")
{
  for (u64 n = 1; n <= 500; ++n) CHECK(mobius(n) == oracle::mu(n));
  CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(1) == std::vector<u64>{1});
  CHECK(lcm_u64(4, 6) == 12);
  CHECK_THROWS_AS(lcm_u64(u64{1} << 63, 3), std::overflow_error);
}

TEST_CASE("primitive words")
{
  CHECK(least_rotation_period("abab") == 2);
  CHECK(least_rotation_period("aab") == 3);
  CHECK(is_primitive_word("0"));
  CHECK_FALSE(is_primitive_word("0000"));
}

TEST_CASE("numerical semigroup against brute force")
{
  std::mt19937_64 rng(7);
  for (int round = 0; round < 40; ++round) {
    std::vector<u64> gens;
    const int k = 2 + round % 3;
    for (int i = 0; i < k; ++i) gens.push_back(std::uniform_int_distribution<u64>(2, 15)(rng));
    gens.push_back(gens[0] + 1);  // gcd 1
    NumericalSemigroup s(gens);
    std::vector<char> reach(400, 0);
    reach[0] = 1;
    for (u64 m = 1; m < 400; ++m)
      for (u64 g : gens)
        if (g <= m && reach[m - g]) reach[m] = 1;
    std::int64_t frob = -1;
    for (u64 m = 0; m < 400; ++m) {
      CHECK(s.contains(m) == bool(reach[m]));
      if (!reach[m]) frob = static_cast<std::int64_t>(m);
    }
    CHECK(s.frobenius() == frob);
  }
  CHECK(NumericalSemigroup({3, 5}).frobenius() == 7);
  CHECK(NumericalSemigroup({1}).frobenius() == -1);
}

TEST_CASE("graph construction errors")
{
  CHECK_THROWS_AS(DirectedMultigraph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedMultigraph({"a"}, {{"e", "a", "b"}}), std::invalid_argument);
  CHECK_THROWS_AS(DirectedMultigraph({"a"}, {{"e", "a", "a"}, {"e", "a", "a"}}),
                  std::invalid_argument);
}

TEST_CASE("scc and period")
{
  auto g = oracle::golden_mean();
  auto scc = scc_decompose(g);
  REQUIRE(scc.components.size() == 1);
  CHECK(component_period(g, scc.components[0]) == 1);
  CHECK(is_mixing(g));

  auto c = oracle::cycle(4);
  CHECK(is_irreducible(c));
  CHECK_FALSE(is_mixing(c));
  CHECK(component_period(c, scc_decompose(c).components[0]) == 4);

  // a -> b, no cycles
  DirectedMultigraph dag({"a", "b"}, {{"e", "a", "b"}});
  auto d = scc_decompose(dag);
  CHECK(d.components.size() == 2);
  CHECK(d.nontrivial_count() == 0);
  CHECK_THROWS_AS(component_period(dag, d.components[0]), std::invalid_argument);
  CHECK_FALSE(is_irreducible(dag));

  // two 2-cycles joined one way
  auto two = DirectedMultigraph::from_edges(
      4, std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}});
  auto t = scc_decompose(two);
  CHECK(t.nontrivial_count() == 2);
  CHECK(t.condensation.size() == 1);
}

TEST_CASE("subdivide and disjoint union")
{
  auto g = oracle::golden_mean().subdivide(3);
  CHECK(g.vertex_count() == 2 + 3 * 2);
  CHECK(g.edge_count() == 9);
  CHECK(oracle::lps(g, 12) == std::set<u64>{3, 6, 9, 12});
  std::vector<DirectedMultigraph> parts{oracle::cycle(2), oracle::cycle(3)};
  auto u = DirectedMultigraph::disjoint_union(parts);
  CHECK(u.vertex_count() == 5);
  CHECK(oracle::lps(u, 7) == std::set<u64>{2, 3});
}

TEST_CASE("trace_power matches closed path counts")
{
  auto g = oracle::golden_mean();
  std::vector<int> expect{1, 3, 4, 7, 11};
  for (u64 n = 1; n <= 5; ++n) CHECK(trace_power(g, n) == expect[n - 1]);
  CHECK_THROWS_AS(trace_power(g, 0), std::invalid_argument);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    auto h = oracle::random_graph(rng, 5, 10);
    auto counts = oracle::closed_path_counts(h, 9);
    for (u64 n = 1; n <= 9; ++n) CHECK(trace_power(h, n) == counts.p[n - 1]);
  }
}

TEST_CASE("closed path enumeration")
{
  auto paths = enumerate_closed_paths(oracle::golden_mean(), 4);
  CHECK(paths[1].size() == 1);
  CHECK(paths[4].size() == 7);
  CHECK_THROWS_AS(enumerate_closed_paths(oracle::full_shift(3), 12, 1000), ResourceLimitExceeded);
}

TEST_CASE("parallel kernels agree with serial references")
{
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    auto g = oracle::random_graph(rng, 8, 20);
    CHECK(trace_sequence(g, 30) == trace_sequence_serial(g, 30));
    CHECK(trace_sequence(g, 30) == oracle::traces(g, 30));
    auto a = BigMatrix::adjacency(g);
    CHECK(multiply(a, a) == multiply_serial(a, a));
    CHECK(enumerate_closed_paths(g, 7) == enumerate_closed_paths_serial(g, 7));
  }
  // long chains exercise the contracted-edge path
  auto sub = oracle::golden_mean().subdivide(5);
  CHECK(trace_sequence(sub, 40) == oracle::traces(sub, 40));
  CHECK(matrix_power(BigMatrix::adjacency(oracle::golden_mean()), 10).trace() == 123);
}
