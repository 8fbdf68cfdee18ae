#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "periodlab/numeric.hpp"

namespace periodlab {

class LabeledGraph;

// Subset of {0..n-1} as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), bits_((n + 63) / 64, 0) {}
  static VertexSet full(std::size_t n);

  std::size_t universe() const { return n_; }
  void insert(std::size_t v) { bits_[v / 64] |= u64{1} << (v % 64); }
  bool contains(std::size_t v) const { return (bits_[v / 64] >> (v % 64)) & 1; }
  bool empty() const;
  std::size_t count() const;
  std::vector<std::size_t> members() const;
  bool intersects(const VertexSet& o) const;
  void unite(const VertexSet& o);

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<u64> bits_;
};

// Binary relation on {0..n-1}: row u holds the v with (u, v) related.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : rows_(n, VertexSet(n)) {}
  static Relation identity(std::size_t n);
  // (u, v) related iff some edge u -> v carries label a.
  static Relation of_label(const LabeledGraph& lg, char a);

  std::size_t size() const { return rows_.size(); }
  const VertexSet& row(std::size_t u) const { return rows_[u]; }
  void add(std::size_t u, std::size_t v) { rows_[u].insert(v); }
  bool empty() const;

  // Composite "this, then s".
  Relation then(const Relation& s) const;
  VertexSet image(const VertexSet& from) const;
  // True iff the relation, read as a digraph, has a cycle.
  bool has_cycle() const;
  // Vertices lying on a cycle of that digraph.
  VertexSet cyclic_vertices() const;

  auto operator<=>(const Relation&) const = default;

 private:
  std::vector<VertexSet> rows_;
};

}  // namespace periodlab
