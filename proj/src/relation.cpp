#include "periodlab/relation.hpp"

#include <algorithm>
#include <bit>

#include "periodlab/sofic.hpp"

namespace periodlab {

VertexSet VertexSet::full(std::size_t n)
{
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    s.insert(v);
  return s;
}

bool VertexSet::empty() const
{
  return std::all_of(bits_.begin(), bits_.end(), [](u64 w) { return w == 0; });
}

std::size_t VertexSet::count() const
{
  std::size_t c = 0;
  for (u64 w : bits_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<std::size_t> VertexSet::members() const
{
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    u64 w = bits_[k];
    while (w) {
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool VertexSet::intersects(const VertexSet& o) const
{
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] & o.bits_[k])
      return true;
  }
  return false;
}

void VertexSet::unite(const VertexSet& o)
{
  for (std::size_t k = 0; k < bits_.size(); ++k)
    bits_[k] |= o.bits_[k];
}

Relation Relation::identity(std::size_t n)
{
  Relation r(n);
  for (std::size_t v = 0; v < n; ++v)
    r.add(v, v);
  return r;
}

Relation Relation::of_label(const LabeledGraph& lg, char a)
{
  const DirectedMultigraph& g = lg.graph();
  Relation r(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (lg.label(e) == a)
      r.add(g.edges()[e].from, g.edges()[e].to);
  }
  return r;
}

bool Relation::empty() const
{
  return std::all_of(rows_.begin(), rows_.end(), [](const VertexSet& s) { return s.empty(); });
}

Relation Relation::then(const Relation& s) const
{
  Relation out(size());
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v : rows_[u].members())
      out.rows_[u].unite(s.rows_[v]);
  }
  return out;
}

VertexSet Relation::image(const VertexSet& from) const
{
  VertexSet out(size());
  for (std::size_t u : from.members())
    out.unite(rows_[u]);
  return out;
}

bool Relation::has_cycle() const
{
  // Peel off vertices without a successor among the survivors; what is left
  // carries an infinite walk, hence a cycle.
  VertexSet alive = VertexSet::full(size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u : alive.members()) {
      if (!rows_[u].intersects(alive)) {
        VertexSet next(size());
        for (std::size_t v : alive.members())
          if (v != u)
            next.insert(v);
        alive = std::move(next);
        changed = true;
      }
    }
  }
  return !alive.empty();
}

VertexSet Relation::cyclic_vertices() const
{
  VertexSet out(size());
  for (std::size_t u = 0; u < size(); ++u) {
    VertexSet seen(size());
    std::vector<std::size_t> stack = rows_[u].members();
    for (std::size_t v : stack)
      seen.insert(v);
    while (!stack.empty() && !seen.contains(u)) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : rows_[v].members()) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      }
    }
    if (seen.contains(u))
      out.insert(u);
  }
  return out;
}

}  // namespace periodlab
