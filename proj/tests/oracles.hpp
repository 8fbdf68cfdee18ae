#pragma once
// Independent reference computations for the tests. Nothing here calls into
// the library beyond the plain data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "periodlab/graph.hpp"
#include "periodlab/sofic.hpp"

namespace oracle {

using periodlab::BigInt;
using periodlab::DirectedMultigraph;
using periodlab::LabeledGraph;
using periodlab::u64;

inline std::size_t rotation_period(const std::vector<std::size_t>& w)
{
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return p;
  }
  return n;
}

inline std::size_t rotation_period(const std::string& w)
{
  return rotation_period(std::vector<std::size_t>(w.begin(), w.end()));
}

// p_n and q_n for n <= N by listing every closed edge path.
struct PathCounts {
  std::vector<u64> p, q;  // index n-1
};

inline PathCounts closed_path_counts(const DirectedMultigraph& g, std::size_t N)
{
  PathCounts out{std::vector<u64>(N, 0), std::vector<u64>(N, 0)};
  const auto& E = g.edges();
  std::vector<std::size_t> path;
  std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t start, std::size_t at) {
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (E[e].from != at) continue;
      path.push_back(e);
      if (E[e].to == start) {
        const std::size_t n = path.size();
        ++out.p[n - 1];
        if (rotation_period(path) == n) ++out.q[n - 1];
      }
      if (path.size() < N) walk(start, E[e].to);
      path.pop_back();
    }
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) walk(v, v);
  return out;
}

// tr(A^n) by naive repeated multiplication.
inline std::vector<BigInt> traces(const DirectedMultigraph& g, std::size_t N)
{
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n, 0));
  for (const auto& e : g.edges()) a[e.from][e.to] += 1;
  auto m = a;
  std::vector<BigInt> out;
  for (std::size_t k = 1; k <= N; ++k) {
    BigInt t = 0;
    for (std::size_t i = 0; i < n; ++i) t += m[i][i];
    out.push_back(t);
    std::vector<std::vector<BigInt>> next(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j] != 0)
          for (std::size_t l = 0; l < n; ++l) next[i][l] += m[i][j] * a[j][l];
    m = std::move(next);
  }
  return out;
}

inline int mu(u64 n)
{
  int r = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    r = -r;
  }
  return n > 1 ? -r : r;
}

// q_n = sum over d | n of mu(n/d) p_d.
inline std::vector<BigInt> least(const std::vector<BigInt>& p)
{
  std::vector<BigInt> q(p.size(), 0);
  for (std::size_t n = 1; n <= p.size(); ++n)
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) q[n - 1] += mu(n / d) * p[d - 1];
  return q;
}

// Least period set of the edge shift up to N.
inline std::set<u64> lps(const DirectedMultigraph& g, std::size_t N)
{
  auto q = least(traces(g, N));
  std::set<u64> s;
  for (std::size_t n = 1; n <= N; ++n)
    if (q[n - 1] > 0) s.insert(n);
  return s;
}

// w^inf is a point of the sofic shift iff the transition relation of w has
// a cycle.
inline bool periodic_word_allowed(const LabeledGraph& lg, const std::string& w)
{
  const auto& g = lg.graph();
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<char>> r(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  for (char c : w) {
    std::vector<std::vector<char>> next(n, std::vector<char>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t e = 0; e < g.edge_count(); ++e)
        if (lg.label(e) == c && r[i][g.edges()[e].from]) next[i][g.edges()[e].to] = 1;
    r = std::move(next);
  }
  // cycle in r: transitive closure, then a diagonal entry
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (r[i][i]) return true;
  return false;
}

// Least periods of the sofic shift up to N, by trying every word.
inline std::set<u64> sofic_lps(const LabeledGraph& lg, std::size_t N)
{
  const std::string alpha = lg.alphabet();
  std::set<u64> out;
  for (std::size_t n = 1; n <= N; ++n) {
    std::vector<std::size_t> digits(n, 0);
    while (true) {
      std::string w;
      for (auto d : digits) w += alpha[d];
      if (rotation_period(w) == n && periodic_word_allowed(lg, w)) {
        out.insert(n);
        break;
      }
      std::size_t i = 0;
      while (i < n && ++digits[i] == alpha.size()) digits[i++] = 0;
      if (i == n) break;
    }
  }
  return out;
}

// One-term sums and sums using two distinct values (x + y + anything), up to N.
inline std::set<u64> almost_sums(const std::set<u64>& s, u64 N)
{
  std::vector<char> reach(N + 1, 0);
  reach[0] = 1;
  for (u64 m = 1; m <= N; ++m)
    for (u64 x : s)
      if (x <= m && reach[m - x]) reach[m] = 1;
  std::set<u64> out;
  for (u64 m = 1; m <= N; ++m) {
    if (s.count(m)) out.insert(m);
    for (u64 x : s)
      for (u64 y : s)
        if (x < y && x + y <= m && reach[m - x - y]) out.insert(m);
  }
  return out;
}

inline DirectedMultigraph random_graph(std::mt19937_64& rng, std::size_t max_vertices,
                                       std::size_t max_edges)
{
  std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::size_t m = std::uniform_int_distribution<std::size_t>(1, max_edges)(rng);
  // distinct (from, to) pairs keep brute-force path counts small
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) pairs.emplace_back(u, v);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  pairs.resize(std::min(m, pairs.size()));
  return DirectedMultigraph::from_edges(n, pairs);
}

inline LabeledGraph random_labeled(std::mt19937_64& rng, std::size_t max_vertices,
                                   std::size_t max_edges, const std::string& alphabet = "01")
{
  auto g = random_graph(rng, max_vertices, max_edges);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<char> labels;
  for (std::size_t e = 0; e < g.edge_count(); ++e) labels.push_back(alphabet[pick(rng)]);
  return LabeledGraph(std::move(g), std::move(labels));
}

inline DirectedMultigraph golden_mean()
{
  return DirectedMultigraph({"a", "b"}, {{"e1", "a", "a"}, {"e2", "a", "b"}, {"e3", "b", "a"}});
}

inline DirectedMultigraph cycle(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return DirectedMultigraph::from_edges(n, e);
}

inline DirectedMultigraph full_shift(std::size_t k)
{
  std::vector<std::pair<std::size_t, std::size_t>> e(k, {0, 0});
  return DirectedMultigraph::from_edges(1, e);
}

inline LabeledGraph even_shift()
{
  DirectedMultigraph g({"s0", "s1"},
                       {{"e1", "s0", "s0"}, {"e2", "s0", "s1"}, {"e3", "s1", "s0"}});
  return LabeledGraph(std::move(g), {'1', '0', '0'});
}

inline LabeledGraph zero_two_cycle()
{
  DirectedMultigraph g({"a", "b"}, {{"e1", "a", "b"}, {"e2", "b", "a"}});
  return LabeledGraph(std::move(g), {'0', '0'});
}

inline LabeledGraph golden_cover()
{
  return LabeledGraph(golden_mean(), {'0', '1', '0'});
}

inline LabeledGraph full_cover()
{
  DirectedMultigraph g({"s"}, {{"e1", "s", "s"}, {"e2", "s", "s"}});
  return LabeledGraph(std::move(g), {'0', '1'});
}

}  // namespace oracle
