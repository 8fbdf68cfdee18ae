#include "periodlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "periodlab/kernels.hpp"

namespace periodlab {

namespace {

std::string padded(std::size_t value, std::size_t width, char prefix)
{
  std::string digits = std::to_string(value);
  if (digits.size() < width)
    digits.insert(0, width - digits.size(), '0');
  return std::string(1, prefix) + digits;
}

std::size_t digit_width(std::size_t count)
{
  return std::to_string(count == 0 ? 0 : count - 1).size();
}

}  // namespace

DirectedMultigraph::DirectedMultigraph(std::vector<std::string> vertex_ids,
                                       const std::vector<EdgeSpec>& edges)
    : vertex_ids_(std::move(vertex_ids))
{
  std::sort(vertex_ids_.begin(), vertex_ids_.end());
  if (std::adjacent_find(vertex_ids_.begin(), vertex_ids_.end()) != vertex_ids_.end())
    throw std::invalid_argument("duplicate vertex id");

  std::set<std::string> edge_ids;
  edges_.reserve(edges.size());
  for (const EdgeSpec& spec : edges) {
    auto from = vertex_index(spec.from);
    auto to = vertex_index(spec.to);
    if (!from || !to)
      throw std::invalid_argument("edge '" + spec.id + "' references an unknown vertex");
    if (!edge_ids.insert(spec.id).second)
      throw std::invalid_argument("duplicate edge id '" + spec.id + "'");
    edges_.push_back(Edge{spec.id, *from, *to});
  }
  index_edges();
}

DirectedMultigraph DirectedMultigraph::from_edges(
    std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> edges)
{
  DirectedMultigraph g;
  const std::size_t vw = digit_width(vertex_count);
  const std::size_t ew = digit_width(edges.size());
  g.vertex_ids_.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v)
    g.vertex_ids_.push_back(padded(v, vw, 'v'));
  g.edges_.reserve(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    auto [from, to] = edges[k];
    if (from >= vertex_count || to >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range");
    g.edges_.push_back(Edge{padded(k, ew, 'e'), from, to});
  }
  g.index_edges();
  return g;
}

void DirectedMultigraph::index_edges()
{
  out_.assign(vertex_ids_.size(), {});
  in_.assign(vertex_ids_.size(), {});
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    out_[edges_[k].from].push_back(k);
    in_[edges_[k].to].push_back(k);
  }
}

std::optional<std::size_t> DirectedMultigraph::vertex_index(const std::string& id) const
{
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id)
    return std::nullopt;
  return static_cast<std::size_t>(it - vertex_ids_.begin());
}

std::vector<std::vector<u64>> DirectedMultigraph::adjacency_counts() const
{
  std::vector<std::vector<u64>> a(vertex_count(), std::vector<u64>(vertex_count(), 0));
  for (const Edge& e : edges_)
    ++a[e.from][e.to];
  return a;
}

DirectedMultigraph DirectedMultigraph::induced(std::span<const std::size_t> vertices) const
{
  std::vector<bool> keep(vertex_count(), false);
  std::vector<std::string> ids;
  for (std::size_t v : vertices) {
    if (!keep[v])
      ids.push_back(vertex_ids_[v]);
    keep[v] = true;
  }
  std::vector<EdgeSpec> specs;
  for (const Edge& e : edges_) {
    if (keep[e.from] && keep[e.to])
      specs.push_back({e.id, vertex_ids_[e.from], vertex_ids_[e.to]});
  }
  return DirectedMultigraph(std::move(ids), specs);
}

DirectedMultigraph DirectedMultigraph::subdivide(u64 factor) const
{
  if (factor == 0)
    throw std::invalid_argument("subdivision factor must be positive");
  if (factor == 1)
    return *this;
  std::vector<std::string> ids = vertex_ids_;
  std::vector<EdgeSpec> specs;
  for (const Edge& e : edges_) {
    std::string prev = vertex_ids_[e.from];
    for (u64 k = 1; k < factor; ++k) {
      std::string mid = e.id + "~" + std::to_string(k);
      ids.push_back(mid);
      specs.push_back({e.id + "." + std::to_string(k), prev, mid});
      prev = mid;
    }
    specs.push_back({e.id + "." + std::to_string(factor), prev, vertex_ids_[e.to]});
  }
  return DirectedMultigraph(std::move(ids), specs);
}

DirectedMultigraph DirectedMultigraph::disjoint_union(std::span<const DirectedMultigraph> parts)
{
  std::vector<std::string> ids;
  std::vector<EdgeSpec> specs;
  const std::size_t width = digit_width(parts.size());
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string prefix = padded(p, width, 'c') + ":";
    const DirectedMultigraph& g = parts[p];
    for (const std::string& id : g.vertex_ids_)
      ids.push_back(prefix + id);
    for (const Edge& e : g.edges_)
      specs.push_back({prefix + e.id, prefix + g.vertex_ids_[e.from], prefix + g.vertex_ids_[e.to]});
  }
  return DirectedMultigraph(std::move(ids), specs);
}

std::size_t SccDecomposition::nontrivial_count() const
{
  return static_cast<std::size_t>(std::count(nontrivial.begin(), nontrivial.end(), true));
}

SccDecomposition scc_decompose(const DirectedMultigraph& g)
{
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), raw_comp(n, unset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> raw;
  std::size_t counter = 0;

  // Iterative Tarjan: frames of (vertex, next out-edge position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset)
      continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto& outs = g.out_edges(v);
      if (pos < outs.size()) {
        const std::size_t w = g.edges()[outs[pos++]].to;
        if (index[w] == unset) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          raw_comp[w] = raw.size();
          comp.push_back(w);
        } while (w != v);
        raw.push_back(std::move(comp));
      }
      const std::size_t finished = v;
      frames.pop_back();
      if (!frames.empty())
        low[frames.back().first] = std::min(low[frames.back().first], low[finished]);
    }
  }

  for (auto& comp : raw)
    std::sort(comp.begin(), comp.end());
  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return raw[a].front() < raw[b].front(); });
  std::vector<std::size_t> rank(raw.size());
  for (std::size_t k = 0; k < order.size(); ++k)
    rank[order[k]] = k;

  SccDecomposition result;
  result.components.resize(raw.size());
  result.nontrivial.assign(raw.size(), false);
  result.component_of.assign(n, 0);
  for (std::size_t k = 0; k < raw.size(); ++k)
    result.components[rank[k]] = std::move(raw[k]);
  for (std::size_t v = 0; v < n; ++v)
    result.component_of[v] = rank[raw_comp[v]];

  std::set<std::pair<std::size_t, std::size_t>> cond;
  for (const Edge& e : g.edges()) {
    const std::size_t a = result.component_of[e.from];
    const std::size_t b = result.component_of[e.to];
    if (a == b)
      result.nontrivial[a] = true;
    else
      cond.emplace(a, b);
  }
  result.condensation.assign(cond.begin(), cond.end());
  return result;
}

u64 component_period(const DirectedMultigraph& g, std::span<const std::size_t> component)
{
  if (component.empty())
    throw std::invalid_argument("component_period: empty component");
  std::vector<bool> member(g.vertex_count(), false);
  for (std::size_t v : component)
    member[v] = true;

  constexpr u64 unset = static_cast<u64>(-1);
  std::vector<u64> level(g.vertex_count(), unset);
  std::deque<std::size_t> queue{component.front()};
  level[component.front()] = 0;
  u64 period = 0;
  bool has_edge = false;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t e : g.out_edges(v)) {
      const std::size_t w = g.edges()[e].to;
      if (!member[w])
        continue;
      has_edge = true;
      if (level[w] == unset) {
        level[w] = level[v] + 1;
        queue.push_back(w);
      } else {
        // level[v] + 1 - level[w] can be negative; only its magnitude matters.
        const u64 a = level[v] + 1;
        const u64 diff = a >= level[w] ? a - level[w] : level[w] - a;
        period = std::gcd(period, diff);
      }
    }
  }
  if (!has_edge)
    throw std::invalid_argument("component_period: component has no cycle");
  for (std::size_t v : component) {
    if (level[v] == unset)
      throw std::invalid_argument("component_period: vertex set is not strongly connected");
  }
  return period;
}

bool is_irreducible(const DirectedMultigraph& g)
{
  if (g.empty())
    return false;
  const SccDecomposition scc = scc_decompose(g);
  return scc.components.size() == 1 && scc.nontrivial[0];
}

bool is_mixing(const DirectedMultigraph& g)
{
  if (!is_irreducible(g))
    return false;
  std::vector<std::size_t> all(g.vertex_count());
  std::iota(all.begin(), all.end(), 0);
  return component_period(g, all) == 1;
}

BigInt trace_power(const DirectedMultigraph& g, u64 n)
{
  if (n == 0)
    throw std::invalid_argument("trace_power: n must be positive");
  if (g.empty())
    return 0;
  return matrix_power(BigMatrix::adjacency(g), n).trace();
}

}  // namespace periodlab
