// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "periodlab/classification.hpp"
#include "periodlab/counting.hpp"
#include "periodlab/gapshift.hpp"
#include "periodlab/realize.hpp"
#include "periodlab/sofic.hpp"
#include "periodlab/zeta.hpp"

using namespace periodlab;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
  int failures = 0;

  void fail(const std::string& why)
  {
    if (pass) note = why;
    pass = false;
    ++failures;
  }
  void expect(bool ok, const std::string& why)
  {
    if (!ok) fail(why);
  }
};

std::set<u64> upto(const PeriodSetDescriptor& d, u64 N)
{
  auto v = d.members_upto(N);
  return {v.begin(), v.end()};
}

std::string show(const std::set<u64>& s)
{
  std::ostringstream o;
  o << '{';
  bool first = true;
  for (u64 x : s) o << (first ? "" : ",") << x, first = false;
  o << '}';
  return o.str();
}

u64 largest_threshold(const PeriodSetDescriptor& d)
{
  u64 t = d.finite().empty() ? 1 : *d.finite().rbegin();
  for (const auto& c : d.components()) t = std::max(t, c.d * c.threshold);
  return t;
}

std::vector<DirectedMultigraph> corpus()
{
  std::mt19937_64 rng(20240601);
  std::vector<DirectedMultigraph> out;
  for (int i = 0; i < 100; ++i) out.push_back(oracle::random_graph(rng, 6, 12));
  return out;
}

// 1. p_n and q_n against closed-path enumeration
Outcome counting(const std::vector<DirectedMultigraph>& graphs)
{
  Outcome o;
  for (std::size_t i = 0; i < graphs.size() && o.pass; ++i) {
    const auto& g = graphs[i];
    auto bf = oracle::closed_path_counts(g, 12);
    std::vector<BigInt> p;
    for (u64 n = 1; n <= 12; ++n) p.push_back(trace_power(g, n));
    auto t = count_table_from_periodic(p);
    for (u64 n = 1; n <= 12; ++n) {
      o.expect(p[n - 1] == bf.p[n - 1], "p_" + std::to_string(n) + " on graph " + std::to_string(i));
      o.expect(t.q[n - 1] == bf.q[n - 1], "q_" + std::to_string(n) + " on graph " + std::to_string(i));
    }
  }
  if (o.pass) o.note = "100 graphs, n <= 12";
  return o;
}

// 2. least period descriptors: shape, certification, membership, table row
Outcome lps_shape(const std::vector<DirectedMultigraph>& graphs)
{
  Outcome o;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto& g = graphs[i];
    const auto lps = lps_descriptor_sft(g);
    const std::string tag = " on graph " + std::to_string(i) + " (" + lps.to_string() + ")";
    o.expect(lps.certified(), "uncertified" + tag);
    const u64 N = 3 * largest_threshold(lps);
    auto q = oracle::least(oracle::traces(g, N));
    for (u64 n = 1; n <= N; ++n)
      o.expect(lps.contains(n) == (q[n - 1] > 0), "membership of " + std::to_string(n) + tag);
    if (is_irreducible(g)) {
      const Transitivity row = is_mixing(g) ? Transitivity::mixing : Transitivity::transitive;
      o.expect(matches_table_form(lps, {row, SystemClass::sft}), "table row" + tag);
    } else if (!lps.empty()) {
      o.expect(matches_table_form(lps, {Transitivity::general, SystemClass::sft}), "table row" + tag);
    }
  }
  if (o.pass) o.note = "100 graphs, n <= 3 x largest threshold";
  return o;
}

// 3. period sets
Outcome period_sets(const std::vector<DirectedMultigraph>& graphs)
{
  Outcome o;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto ps = ps_descriptor(graphs[i]);
    auto p = oracle::traces(graphs[i], 60);
    for (u64 n = 1; n <= 60; ++n) {
      o.expect(ps.contains(n) == (p[n - 1] > 0), "membership of " + std::to_string(n) + " on graph " + std::to_string(i));
      if (ps.contains(n))
        for (u64 k = 2; k * n <= 60; ++k)
          o.expect(ps.contains(k * n), "monotonicity at " + std::to_string(n) + " on graph " + std::to_string(i));
    }
  }
  if (o.pass) o.note = "100 graphs, n <= 60";
  return o;
}

// tr(A^n) for n <= N in 128-bit arithmetic (0/1 matrices up to 5x5, N = 40)
std::vector<BigInt> traces128(const DirectedMultigraph& g, std::size_t N)
{
  using u128 = unsigned __int128;
  const std::size_t n = g.vertex_count();
  std::vector<u128> a(n * n, 0), m;
  for (const auto& e : g.edges()) a[e.from * n + e.to] += 1;
  m = a;
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= N; ++k) {
    u128 t = 0;
    for (std::size_t i = 0; i < n; ++i) t += m[i * n + i];
    BigInt b = static_cast<std::uint64_t>(t >> 64);
    b <<= 64;
    b += static_cast<std::uint64_t>(t);
    out.push_back(b);
    std::vector<u128> next(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i * n + j])
          for (std::size_t l = 0; l < n; ++l) next[i * n + l] += m[i * n + j] * a[j * n + l];
    m = std::move(next);
  }
  return out;
}

// 4. zeta function against exp(sum p_n t^n / n); recurrence against traces
Outcome zeta()
{
  Outcome o;
  auto check = [&](const DirectedMultigraph& g, const std::string& tag) {
    const auto tr = traces128(g, 40);
    std::vector<Rational> e(13, 0);
    e[0] = 1;
    for (std::size_t n = 1; n <= 12; ++n) {
      Rational s = 0;
      for (std::size_t k = 1; k <= n; ++k) s += Rational(tr[k - 1]) * e[n - k];
      e[n] = s / n;
    }
    const auto z = zeta_of_graph(g);
    o.expect(z.series(13) == e, "series of " + tag);
    const auto terms = recurrence_from_rational(log_derivative(z), 1).terms(1, 40);
    for (std::size_t n = 0; n < 40; ++n)
      o.expect(terms[n] == Rational(tr[n]), "recurrence term " + std::to_string(n + 1) + " of " + tag);
  };
  std::size_t count = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (std::size_t i = 0; i < n * n; ++i)
        if (bits >> i & 1) edges.emplace_back(i / n, i % n);
      check(DirectedMultigraph::from_edges(n, edges), std::to_string(n) + "x" + std::to_string(n) + " #" + std::to_string(bits));
      ++count;
    }
  std::mt19937_64 rng(4);
  for (int r = 0; r < 50; ++r) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < 25; ++i)
      if (rng() & 1) edges.emplace_back(i / 5, i % 5);
    check(DirectedMultigraph::from_edges(5, edges), "random 5x5 #" + std::to_string(r));
    ++count;
  }
  if (o.pass) o.note = std::to_string(count) + " matrices";
  return o;
}

// 5. unique-preimage layers cover the least period set
Outcome layers()
{
  Outcome o;
  std::vector<std::pair<std::string, LabeledGraph>> cases{
      {"even shift", oracle::even_shift()},
      {"two-phase 0-cycle", oracle::zero_two_cycle()},
      {"golden-mean cover", oracle::golden_cover()}};
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i)
    cases.emplace_back("random #" + std::to_string(i), oracle::random_labeled(rng, 4, 8));
  for (const auto& [name, lg] : cases) {
    std::set<u64> all;
    for (const auto& s : unique_preimage_lps(lg, 14)) all.insert(s.periods.begin(), s.periods.end());
    const auto direct = sofic_lps_upto(lg, 14).periods;
    o.expect(all == direct, name + ": layers " + show(all) + " vs " + show(direct));
    o.expect(direct == oracle::sofic_lps(lg, 14), name + ": sofic_lps_upto vs word enumeration");
  }
  if (o.pass) o.note = std::to_string(cases.size()) + " presentations, N = 14";
  return o;
}

// 6. gap shifts
Outcome gap_shifts()
{
  Outcome o;
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    std::set<u64> s;
    const u64 scale = rng() % 3 + 1;
    for (u64 k = 0, n = rng() % 4 + 1; k < n; ++k) s.insert(scale * (rng() % 15 + 1));
    const auto c = almost_sum_closure(s, 200);
    o.expect(c.members == oracle::almost_sums(s, 200), "closure of " + show(s));
    o.expect(upto(c.descriptor, 200) == c.members, "closure descriptor of " + show(s));
  }
  const GapSet evens({}, {{0, 2}});
  const auto ev = gap_lps(evens);
  o.expect(ev == PeriodSetDescriptor({1}, {{1, 3, {}}}), "gap_lps(evens) = " + ev.to_string());
  o.expect(upto(ev, 20) == sofic_lps_upto(oracle::even_shift(), 20).periods, "evens vs even shift");

  std::vector<PeriodSetDescriptor> requests{
      PeriodSetDescriptor::singleton(4), PeriodSetDescriptor({2, 3, 5}, {{1, 7, {}}}),
      PeriodSetDescriptor({1}, {{1, 3, {}}})};
  std::uniform_int_distribution<u64> small(0, 7);
  while (requests.size() < 25) {
    std::set<u64> finite;
    for (u64 k = 0, m = small(rng) % 4 + 1; k < m; ++k) finite.insert(small(rng));
    std::vector<Progression> prog;
    if (rng() % 2) prog.push_back({small(rng) + 2, small(rng) % 4 + 1});
    requests.push_back(gap_lps(GapSet(finite, prog)));
  }
  for (const auto& q : requests)
    o.expect(gap_lps(gap_realize(q)) == q, "round trip of " + q.to_string());
  if (o.pass) o.note = "50 closures to 200, 25 round trips";
  return o;
}

PeriodSetDescriptor random_scaled_cofinite(std::mt19937_64& rng)
{
  const u64 d = rng() % 4 + 1, N = rng() % 9 + 1;
  std::set<u64> f;
  for (u64 k = 0, m = rng() % 4; k < m && N > 1; ++k) f.insert(d * (rng() % (N - 1) + 1));
  if (!f.empty() && N > 1) f.insert(d * (N - 1));
  return PeriodSetDescriptor(f, {{d, N, {}}});
}

// 7. realization round trips
Outcome realizations()
{
  Outcome o;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const auto want = random_scaled_cofinite(rng);
    const auto g = realize_irreducible_sft(want);
    o.expect(is_irreducible(g), "irreducible_sft not irreducible for " + want.to_string());
    o.expect(lps_descriptor_sft(g) == want, "irreducible_sft round trip of " + want.to_string());
  }
  for (int i = 0; i < 50; ++i) {
    auto want = random_scaled_cofinite(rng);
    if (rng() % 2) want = want.united(random_scaled_cofinite(rng));
    if (rng() % 2) want = want.united(PeriodSetDescriptor::singleton(rng() % 9 + 1));
    o.expect(lps_descriptor_sft(realize_reducible_sft(want)) == want,
             "reducible_sft round trip of " + want.to_string());
  }

  const auto worked = PeriodSetDescriptor::tail(2, 3);
  std::vector<PeriodSetDescriptor> sofic{worked, PeriodSetDescriptor::tail(1),
                                         PeriodSetDescriptor::singleton(1)};
  while (sofic.size() < 15) {
    std::set<u64> f;
    for (u64 k = 0, m = rng() % 3; k < m; ++k) f.insert(rng() % 12 + 1);
    std::vector<DescriptorComponent> cs;
    for (u64 k = 0, m = rng() % 2 + 1; k < m; ++k) cs.push_back({rng() % 3 + 1, rng() % 5 + 1, {}});
    sofic.emplace_back(f, cs);
  }
  for (const auto& want : sofic) {
    const auto r = realize_sofic_detailed(want);
    o.expect(is_irreducible(r.graph.graph()), "sofic not irreducible for " + want.to_string());
    const auto got = sofic_lps_upto(r.graph, 40).periods;
    o.expect(got == upto(want, 40), "sofic round trip of " + want.to_string() + ": " + show(got));
  }
  const auto w = realize_sofic_detailed(worked);
  o.expect(w.missed == std::set<u64>{10},
           "worked instance {6,8,10,...}: F' = " + show(w.missed) + ", expected {10}");

  struct Arb {
    std::string name;
    std::function<bool(u64)> member;
    bool finite;
  };
  std::vector<Arb> arbs{{"odds", [](u64 n) { return n % 2 == 1; }, false},
                        {"{1,3}", [](u64 n) { return n == 1 || n == 3; }, true},
                        {"{2,5,6,7,...}", [](u64 n) { return n == 2 || n >= 5; }, false},
                        {"powers of two", [](u64 n) { return (n & (n - 1)) == 0; }, false}};
  for (const auto& a : arbs) {
    auto h = a.finite ? realize_arbitrary(std::vector<u64>{1, 3}) : realize_arbitrary(a.member);
    std::set<u64> got, want;
    for (const auto& word : h.periodic_points_upto(15)) got.insert(oracle::rotation_period(word));
    for (u64 n = 1; n <= 15; ++n)
      if (a.member(n)) want.insert(n);
    o.expect(got == want, "arbitrary " + a.name + ": " + show(got));
  }
  if (o.pass) o.note = "100 SFT, 15 sofic (N = 40), 4 arbitrary";
  return o;
}

// 8. Sharkovskii order and tails
Outcome sharkovskii()
{
  Outcome o;
  const u64 M = 200;
  std::vector<std::vector<char>> less(M + 1, std::vector<char>(M + 1, 0));
  for (u64 a = 1; a <= M; ++a)
    for (u64 b = 1; b <= M; ++b)
      if (a != b) less[a][b] = sharkovskii_less(a, b);
  for (u64 a = 1; a <= M; ++a)
    for (u64 b = 1; b <= M; ++b) {
      if (a == b) continue;
      o.expect(less[a][b] != less[b][a], "trichotomy at " + std::to_string(a) + "," + std::to_string(b));
      if (!less[a][b]) continue;
      for (u64 c = 1; c <= M; ++c)
        if (c != a && c != b && less[b][c])
          o.expect(less[a][c], "transitivity at " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
    }
  for (u64 a = 2; a <= M; ++a) o.expect(a == 3 || less[3][a], "3 first");
  for (u64 a = 2; a <= M; ++a) o.expect(less[a][1], "1 last");
  for (u64 s = 1; s <= 128; ++s)
    o.expect(is_sharkovskii_tail(SharkovskiiTail::from(s), 128).is_tail, "tail from " + std::to_string(s));
  o.expect(is_sharkovskii_tail(SharkovskiiTail::powers_of_two(), 128).is_tail, "powers of two");
  const auto bad = is_sharkovskii_tail([](u64 n) { return n == 5 || n == 1; }, 128);
  o.expect(!bad.is_tail && bad.member == 5 && bad.missing == 7, "{5,1} witness");
  if (o.pass) o.note = "[1,200] order, tails on [1,128], {5,1} -> 7";
  return o;
}

// 9. receptive points of the even shift
Outcome receptive()
{
  Outcome o;
  const auto dp = determinize_and_minimize(oracle::even_shift());
  o.expect(dp.minimal, "even shift cover not minimal");
  o.expect(is_receptive(dp, "100").receptive, "100 not receptive");
  o.expect(!is_receptive(dp, "0").receptive, "0 receptive");
  const auto rec = receptive_lps_upto(dp, 30);
  const auto comps = analyze_components(dp.graph.graph());
  o.expect(comps.size() == 1, "cover not irreducible");
  if (comps.size() == 1) {
    const u64 d = comps[0].period, threshold = comps[0].lps_threshold;
    for (const auto& [n, w] : rec) o.expect(n % d == 0, "period outside dN");
    for (u64 n = d; n <= 30; n += d)
      if (!rec.count(n)) o.expect(n < threshold, "gap " + std::to_string(n) + " above threshold");
    o.note = "d = " + std::to_string(d) + ", " + std::to_string(rec.size()) + " periods to 30, threshold " +
             std::to_string(threshold);
  }
  return o;
}

// 10. Krieger checker
Outcome krieger()
{
  Outcome o;
  const auto gm = oracle::golden_mean();
  const auto a = krieger_check(oracle::cycle(2), gm, 10);
  o.expect(a.kind == KriegerVerdict::Kind::pass_at_desk_scale, "2-cycle into golden mean");
  const auto b = krieger_check(oracle::full_shift(2), gm, 10);
  o.expect(b.kind == KriegerVerdict::Kind::entropy_fail && b.entropy_certified, "full 2-shift into golden mean");
  const auto c = krieger_check(oracle::cycle(3), oracle::cycle(3), 10);
  o.expect(c.kind == KriegerVerdict::Kind::entropy_fail, "3-cycle into itself");
  const auto two = perron_bounds(oracle::full_shift(2)), phi = perron_bounds(gm);
  o.expect(two.lower > phi.upper, "log 2 > log phi not certified");
  if (o.pass) o.note = "rho(golden mean) <= " + phi.upper.str() + " < 2";
  return o;
}

}  // namespace

int main()
{
  using clock = std::chrono::steady_clock;
  const auto graphs = corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"counting correctness", [&] { return counting(graphs); }},
      {"least period set shape", [&] { return lps_shape(graphs); }},
      {"period set membership", [&] { return period_sets(graphs); }},
      {"zeta consistency", zeta},
      {"layer decomposition", layers},
      {"gap shifts", gap_shifts},
      {"realization round trips", realizations},
      {"sharkovskii utilities", sharkovskii},
      {"receptive points", receptive},
      {"krieger checker", krieger},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(clock::now() - start).count();
    if (o.failures > 1) o.note += "; " + std::to_string(o.failures - 1) + " more failed checks";
    std::printf("criterion %zu %s: %s (%s) %.2fs\n", i + 1, criteria[i].first.c_str(),
                o.pass ? "PASS" : "FAIL", o.note.c_str(), s);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
