#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "periodlab/gapshift.hpp"

using namespace periodlab;

namespace {

GapSet evens() { return GapSet({}, {{0, 2}}); }

std::set<u64> upto(const PeriodSetDescriptor& d, u64 N)
{
  auto v = d.members_upto(N);
  return {v.begin(), v.end()};
}

GapSet random_gap(std::mt19937_64& rng)
{
  std::uniform_int_distribution<u64> small(0, 7);
  std::set<u64> finite;
  for (u64 i = 0, k = small(rng) % 4 + 1; i < k; ++i) finite.insert(small(rng));
  std::vector<Progression> prog;
  if (rng() % 2) prog.push_back({small(rng) + 2, small(rng) % 4 + 1});
  return GapSet(finite, prog);
}

}  // namespace

TEST_CASE("gap set normalization")
{
  GapSet a({0, 2, 4, 6}, {{8, 2}});
  CHECK(a == evens());
  CHECK(a.progressions().size() == 1);
  CHECK(a.finite().empty());
  GapSet b({1}, {{2, 1}, {5, 3}});
  CHECK(b.is_cofinite());
  CHECK(b.members_upto(6) == std::vector<u64>{1, 2, 3, 4, 5, 6});
  CHECK(GapSet({3, 1}, {}).is_finite());
  CHECK(evens().gcd() == 2);
  CHECK(GapSet({0, 1}, {}).shifted_up(1) == GapSet({1, 2}, {}));
  for (u64 n = 0; n < 30; ++n) CHECK(b.contains(n) == (n >= 1));
}

TEST_CASE("classification")
{
  CHECK(classify_gap(GapSet({1}, {})) == GapClass::sft);
  CHECK(classify_gap(evens()) == GapClass::sofic_not_sft);
  CHECK(classify_gap(GapSet({0}, {{2, 1}})) == GapClass::sft);
}

TEST_CASE("almost sum-closure")
{
  CHECK(almost_sum_closure(std::set<u64>{2}, 20).members == std::set<u64>{2});
  CHECK(almost_sum_closure(std::set<u64>{2}, 20).descriptor == PeriodSetDescriptor::singleton(2));
  CHECK(almost_sum_closure(std::set<u64>{2, 3}, 12).members ==
        std::set<u64>{2, 3, 5, 7, 8, 9, 10, 11, 12});
  CHECK(almost_sum_closure(std::set<u64>{1, 2}, 6).members == std::set<u64>{1, 2, 3, 4, 5, 6});
  CHECK_THROWS(almost_sum_closure(std::set<u64>{}, 6));

  std::mt19937_64 rng(59);
  for (int i = 0; i < 50; ++i) {
    std::set<u64> s;
    const u64 scale = rng() % 3 + 1;
    for (u64 k = 0, n = rng() % 4 + 1; k < n; ++k) s.insert(scale * (rng() % 12 + 1));
    auto c = almost_sum_closure(s, 200);
    auto naive = oracle::almost_sums(s, 200);
    CHECK(c.members == naive);
    CHECK(upto(c.descriptor, 200) == naive);
    if (s.size() >= 2) {
      u64 g = 0;
      for (u64 x : s) g = std::gcd(g, x);
      for (u64 n = c.threshold; n <= 200; ++n)
        if (n % g == 0) CHECK(naive.count(n));
    }
  }
}

TEST_CASE("gap shift least periods")
{
  CHECK(gap_lps(GapSet({1}, {})) == PeriodSetDescriptor::singleton(2));
  auto ev = gap_lps(evens());
  CHECK(ev == PeriodSetDescriptor({1}, {{1, 3, {}}}));
  CHECK(upto(ev, 20) == sofic_lps_upto(oracle::even_shift(), 20).periods);
  CHECK(gap_lps(GapSet({0, 1}, {})) == PeriodSetDescriptor::tail(1));
}

TEST_CASE("presentation agrees with the theorem")
{
  CHECK(gap_to_labeled_graph(GapSet({1}, {})).graph().vertex_count() == 2);
  auto ev = determinize_and_minimize(gap_to_labeled_graph(evens()));
  CHECK(ev.minimal);
  CHECK(ev.graph.graph().vertex_count() == 2);
  CHECK(sofic_lps_upto(gap_to_labeled_graph(GapSet({0, 1}, {})), 10).periods ==
        upto(PeriodSetDescriptor::tail(1), 10));

  std::mt19937_64 rng(61);
  for (int i = 0; i < 30; ++i) {
    auto s = random_gap(rng);
    CHECK_MESSAGE(sofic_lps_upto(gap_to_labeled_graph(s), 20).periods == upto(gap_lps(s), 20),
                  gap_lps(s).to_string());
  }
}

TEST_CASE("gap realization")
{
  CHECK(gap_realize(PeriodSetDescriptor::singleton(4)) == GapSet({3}, {}));

  auto q = PeriodSetDescriptor({2, 3, 5}, {{1, 7, {}}});
  auto s = gap_realize(q);
  CHECK(s.is_finite());
  CHECK(gap_lps(s) == q);

  auto not2 = PeriodSetDescriptor({1}, {{1, 3, {}}});
  CHECK(gap_lps(gap_realize(not2)) == not2);

  // 1 with an almost sum-closed 2R: needs the infinite branch
  auto odd_free = PeriodSetDescriptor({1}, {{2, 2, {}}});
  auto t = gap_realize(odd_free);
  CHECK_FALSE(t.is_finite());
  CHECK(gap_lps(t) == odd_free);

  try {
    gap_realize(PeriodSetDescriptor({2, 3}, {}));
    FAIL("accepted {2,3}");
  } catch (const GapShapeError& e) {
    CHECK(e.x == 2);
    CHECK(e.y == 3);
  }

  std::mt19937_64 rng(67);
  for (int i = 0; i < 25; ++i) {
    auto want = gap_lps(random_gap(rng));
    CHECK_MESSAGE(gap_lps(gap_realize(want)) == want, want.to_string());
  }
}
