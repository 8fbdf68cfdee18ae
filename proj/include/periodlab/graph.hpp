#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "periodlab/numeric.hpp"

namespace periodlab {

struct Edge {
  std::string id;
  std::size_t from = 0;
  std::size_t to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge as written in an input file: endpoints are vertex ids.
struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
};

// Finite directed multigraph; its edge shift is the SFT it presents.
//
// Vertex ids are opaque strings. Internal indices follow the sorted order of
// the ids so that every derived quantity is reproducible. Parallel edges and
// self-loops are allowed. Instances are immutable once built.
class DirectedMultigraph {
 public:
  DirectedMultigraph() = default;

  // Throws std::invalid_argument on duplicate vertex or edge ids and on
  // edges that reference unknown vertices.
  DirectedMultigraph(std::vector<std::string> vertex_ids,
                     const std::vector<EdgeSpec>& edges);

  // Vertices named by zero-padded index so that sorted order equals index
  // order; edges named e<k> in the given order.
  static DirectedMultigraph from_edges(
      std::size_t vertex_count,
      std::span<const std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const { return vertex_ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return vertex_ids_.empty(); }

  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::size_t>& out_edges(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_edges(std::size_t v) const { return in_[v]; }

  std::optional<std::size_t> vertex_index(const std::string& id) const;

  // Entry (u,v) is the number of edges u -> v.
  std::vector<std::vector<u64>> adjacency_counts() const;

  // Subgraph on the given vertices with every edge between them.
  DirectedMultigraph induced(std::span<const std::size_t> vertices) const;

  // Every edge replaced by a path of `factor` edges through fresh vertices.
  DirectedMultigraph subdivide(u64 factor) const;

  // Vertex and edge ids of each part are prefixed to keep them distinct.
  static DirectedMultigraph disjoint_union(std::span<const DirectedMultigraph> parts);

  friend bool operator==(const DirectedMultigraph&, const DirectedMultigraph&) = default;

 private:
  void index_edges();

  std::vector<std::string> vertex_ids_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

struct SccDecomposition {
  // Components ordered by their smallest vertex index; members ascending.
  std::vector<std::vector<std::size_t>> components;
  std::vector<std::size_t> component_of;
  // nontrivial[c] is true iff component c contains an edge (hence a cycle).
  std::vector<bool> nontrivial;
  // Edges of the condensation, (from component, to component), no loops.
  std::vector<std::pair<std::size_t, std::size_t>> condensation;

  std::size_t nontrivial_count() const;
};

SccDecomposition scc_decompose(const DirectedMultigraph& g);

// gcd of the cycle lengths inside a non-trivial strongly connected
// component, from BFS level differences. Throws std::invalid_argument for a
// trivial component.
u64 component_period(const DirectedMultigraph& g, std::span<const std::size_t> component);

// True iff the graph has exactly one non-trivial component and every vertex
// belongs to it.
bool is_irreducible(const DirectedMultigraph& g);

// Irreducible with period 1.
bool is_mixing(const DirectedMultigraph& g);

// tr(A^n) by binary exponentiation of the dense big-integer adjacency matrix.
BigInt trace_power(const DirectedMultigraph& g, u64 n);

// Closed edge paths of length n for every n <= max_length; each path is a
// list of edge indices starting at any vertex. Throws ResourceLimitExceeded
// when more than `path_limit` paths would be produced.
using ClosedPathTable = std::map<u64, std::vector<std::vector<std::size_t>>>;
ClosedPathTable enumerate_closed_paths(const DirectedMultigraph& g, u64 max_length,
                                       std::size_t path_limit = 2'000'000);

}  // namespace periodlab
