#include "periodlab/kernels.hpp"

#include <atomic>

#include <omp.h>

namespace periodlab {

BigMatrix BigMatrix::identity(std::size_t n)
{
  BigMatrix m(n);
  for (std::size_t k = 0; k < n; ++k)
    m(k, k) = 1;
  return m;
}

BigMatrix BigMatrix::adjacency(const DirectedMultigraph& g)
{
  BigMatrix m(g.vertex_count());
  for (const Edge& e : g.edges())
    m(e.from, e.to) += 1;
  return m;
}

BigInt BigMatrix::trace() const
{
  BigInt t = 0;
  for (std::size_t k = 0; k < n_; ++k)
    t += (*this)(k, k);
  return t;
}

BigMatrix multiply(const BigMatrix& a, const BigMatrix& b)
{
  const std::size_t n = a.size();
  BigMatrix c(n);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const BigInt& ark = a(r, k);
      if (ark == 0)
        continue;
      for (std::size_t col = 0; col < n; ++col) {
        if (b(k, col) != 0)
          c(r, col) += ark * b(k, col);
      }
    }
  }
  return c;
}

BigMatrix multiply_serial(const BigMatrix& a, const BigMatrix& b)
{
  const std::size_t n = a.size();
  BigMatrix c(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t k = 0; k < n; ++k)
        c(r, col) += a(r, k) * b(k, col);
  return c;
}

BigMatrix matrix_power(const BigMatrix& a, u64 n)
{
  BigMatrix result = BigMatrix::identity(a.size());
  BigMatrix base = a;
  while (n > 0) {
    if (n & 1)
      result = multiply(result, base);
    n >>= 1;
    if (n > 0)
      base = multiply(base, base);
  }
  return result;
}

namespace {

struct Chain {
  std::size_t from;  // branch index
  std::size_t to;    // branch index
  u64 length;
};

}  // namespace

std::vector<BigInt> trace_sequence(const DirectedMultigraph& g, u64 max_n)
{
  std::vector<BigInt> trace(max_n, 0);
  const std::size_t n = g.vertex_count();
  if (n == 0 || max_n == 0)
    return trace;

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> branch_of(n, none);
  std::vector<std::size_t> branches;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.out_edges(v).size() != 1 || g.in_edges(v).size() != 1) {
      branch_of[v] = branches.size();
      branches.push_back(v);
    }
  }

  std::vector<bool> covered(n, false);
  std::vector<Chain> chains;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    covered[branches[b]] = true;
    for (std::size_t e : g.out_edges(branches[b])) {
      std::size_t cur = g.edges()[e].to;
      u64 len = 1;
      while (branch_of[cur] == none) {
        covered[cur] = true;
        cur = g.edges()[g.out_edges(cur).front()].to;
        ++len;
      }
      chains.push_back({b, branch_of[cur], len});
    }
  }

  // Vertices off every chain have in = out = 1 and form isolated simple cycles.
  for (std::size_t v = 0; v < n; ++v) {
    if (covered[v])
      continue;
    u64 len = 0;
    std::size_t cur = v;
    do {
      covered[cur] = true;
      cur = g.edges()[g.out_edges(cur).front()].to;
      ++len;
    } while (cur != v);
    for (u64 k = len; k <= max_n; k += len)
      trace[k - 1] += len;
  }

  const std::size_t nb = branches.size();
  std::vector<std::vector<std::size_t>> chains_from(nb);
  for (std::size_t c = 0; c < chains.size(); ++c)
    chains_from[chains[c].from].push_back(c);

  std::vector<std::vector<BigInt>> partial(nb);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t t = 0; t < nb; ++t) {
    // walks[s][k]: walks of length k from branch s to branch t.
    std::vector<std::vector<BigInt>> walks(nb, std::vector<BigInt>(max_n + 1, 0));
    walks[t][0] = 1;
    for (u64 k = 1; k <= max_n; ++k) {
      for (std::size_t s = 0; s < nb; ++s) {
        BigInt acc = 0;
        for (std::size_t c : chains_from[s]) {
          if (chains[c].length <= k)
            acc += walks[chains[c].to][k - chains[c].length];
        }
        walks[s][k] = std::move(acc);
      }
    }
    // Closed walks based at t, plus those based at interior vertices of
    // chains leaving t: an interior vertex of a chain t -> s of length l sees
    // exactly the walks s -> t of length k - l.
    std::vector<BigInt> local(max_n, 0);
    for (u64 k = 1; k <= max_n; ++k) {
      local[k - 1] = walks[t][k];
      for (std::size_t c : chains_from[t]) {
        const u64 l = chains[c].length;
        if (l > 1 && l <= k)
          local[k - 1] += (l - 1) * walks[chains[c].to][k - l];
      }
    }
    partial[t] = std::move(local);
  }
  for (const auto& local : partial)
    for (u64 k = 0; k < max_n; ++k)
      trace[k] += local[k];
  return trace;
}

std::vector<BigInt> trace_sequence_serial(const DirectedMultigraph& g, u64 max_n)
{
  std::vector<BigInt> trace(max_n, 0);
  if (g.empty())
    return trace;
  const BigMatrix a = BigMatrix::adjacency(g);
  BigMatrix power = a;
  for (u64 k = 1; k <= max_n; ++k) {
    trace[k - 1] = power.trace();
    if (k < max_n)
      power = multiply_serial(power, a);
  }
  return trace;
}

namespace {

// reach[k][u] is true iff some walk of length k leads from u to target.
std::vector<std::vector<bool>> reach_back(const DirectedMultigraph& g, std::size_t target,
                                          u64 max_length)
{
  std::vector<std::vector<bool>> reach(max_length + 1, std::vector<bool>(g.vertex_count(), false));
  reach[0][target] = true;
  for (u64 k = 1; k <= max_length; ++k) {
    for (const Edge& e : g.edges()) {
      if (reach[k - 1][e.to])
        reach[k][e.from] = true;
    }
  }
  return reach;
}

// All closed paths based at `start` with length <= max_length, appended to
// `out` by length. Returns false if the limit was hit.
bool closed_paths_from(const DirectedMultigraph& g, std::size_t start, u64 max_length,
                       std::atomic<std::size_t>& produced, std::size_t limit,
                       ClosedPathTable& out)
{
  const auto reach = reach_back(g, start, max_length);
  std::vector<std::size_t> path;
  std::vector<std::pair<std::size_t, std::size_t>> frames{{start, 0}};
  while (!frames.empty()) {
    auto& [v, pos] = frames.back();
    const auto& outs = g.out_edges(v);
    if (pos >= outs.size()) {
      frames.pop_back();
      if (!path.empty())
        path.pop_back();
      continue;
    }
    const std::size_t e = outs[pos++];
    const std::size_t w = g.edges()[e].to;
    const u64 depth = path.size() + 1;
    if (depth > max_length)
      continue;
    path.push_back(e);
    if (w == start) {
      if (produced.fetch_add(1) >= limit)
        return false;
      out[depth].push_back(path);
    }
    bool extendable = false;
    for (u64 rest = 1; depth + rest <= max_length && !extendable; ++rest)
      extendable = reach[rest][w];
    if (extendable) {
      frames.emplace_back(w, 0);
    } else {
      path.pop_back();
    }
  }
  return true;
}

}  // namespace

ClosedPathTable enumerate_closed_paths(const DirectedMultigraph& g, u64 max_length,
                                       std::size_t path_limit)
{
  const std::size_t n = g.vertex_count();
  std::vector<ClosedPathTable> per_start(n);
  std::atomic<std::size_t> produced{0};
  std::atomic<bool> exceeded{false};
#pragma omp parallel for schedule(dynamic)
  for (std::size_t s = 0; s < n; ++s) {
    if (exceeded.load())
      continue;
    if (!closed_paths_from(g, s, max_length, produced, path_limit, per_start[s]))
      exceeded.store(true);
  }
  if (exceeded.load())
    throw ResourceLimitExceeded("closed-path enumeration exceeded " +
                                std::to_string(path_limit) + " paths");
  ClosedPathTable table;
  for (auto& part : per_start)
    for (auto& [len, paths] : part)
      for (auto& p : paths)
        table[len].push_back(std::move(p));
  return table;
}

ClosedPathTable enumerate_closed_paths_serial(const DirectedMultigraph& g, u64 max_length,
                                              std::size_t path_limit)
{
  // Plain depth-first walk enumeration without reachability pruning.
  ClosedPathTable table;
  std::size_t produced = 0;
  std::vector<std::size_t> path;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    std::vector<std::pair<std::size_t, std::size_t>> frames{{s, 0}};
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& outs = g.out_edges(v);
      if (pos >= outs.size() || path.size() >= max_length) {
        frames.pop_back();
        if (!path.empty())
          path.pop_back();
        continue;
      }
      const std::size_t e = outs[pos++];
      const std::size_t w = g.edges()[e].to;
      path.push_back(e);
      if (w == s) {
        if (++produced > path_limit)
          throw ResourceLimitExceeded("closed-path enumeration exceeded " +
                                      std::to_string(path_limit) + " paths");
        table[path.size()].push_back(path);
      }
      frames.emplace_back(w, 0);
    }
  }
  return table;
}

}  // namespace periodlab
