#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "periodlab/counting.hpp"
#include "periodlab/graph.hpp"

namespace periodlab {

// Graph plus one single-character label per edge (indexed like edges()).
class LabeledGraph {
 public:
  LabeledGraph() = default;
  LabeledGraph(DirectedMultigraph g, std::vector<char> labels);

  const DirectedMultigraph& graph() const { return g_; }
  char label(std::size_t edge) const { return labels_[edge]; }
  const std::vector<char>& labels() const { return labels_; }
  // Distinct labels in ascending order.
  std::string alphabet() const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  DirectedMultigraph g_;
  std::vector<char> labels_;
};

// Labeled graph restricted to the vertices lying on bi-infinite paths.
LabeledGraph essential_part(const LabeledGraph& lg);

struct PeriodWitness {
  u64 period = 0;
  std::string word;  // primitive word of that length whose orbit is in the shift
  std::size_t layer = 1;
  std::size_t component = 0;
};

struct SoficPeriods {
  CountTable counts;  // p_n, q_n of the sofic shift itself
  std::set<u64> periods;
  // One witness per period; `word` is left empty when the witness search
  // ran out of budget.
  std::vector<PeriodWitness> witnesses;
};

// Exact least periods of the presented shift up to N. p_n is the number of
// words w of length n whose transition relation has a cycle (equivalently
// w^inf is in the shift), counted by dynamic programming over relations.
// Throws ResourceLimitExceeded when more than `relation_limit` relations
// are live at one length or a count overflows 64 bits.
SoficPeriods sofic_lps_upto(const LabeledGraph& lg, u64 horizon,
                            std::size_t relation_limit = 2'000'000);

struct DeterministicPresentation {
  LabeledGraph graph;
  bool minimal = false;
};

// Subset construction, follower-set minimization and extraction of the
// unique terminal component. `minimal` is set iff the presented shift is
// irreducible, in which case the result is its Fischer cover.
DeterministicPresentation determinize_and_minimize(const LabeledGraph& lg);

bool is_right_resolving(const LabeledGraph& lg);

// Words of length 1..L (shortlex) mapping the whole state set onto a single
// state. Throws std::invalid_argument for a non-minimal presentation.
std::vector<std::string> synchronizing_words_upto(const DeterministicPresentation& dp,
                                                  std::size_t max_length);

struct ReceptiveVerdict {
  bool receptive = false;
  // Certificate: the rotation of w read around a closed path of length |w|
  // and that path as edge indices (empty when not receptive).
  std::string rotation;
  std::vector<std::size_t> path;
};

// w must be primitive; dp must be minimal.
ReceptiveVerdict is_receptive(const DeterministicPresentation& dp, const std::string& w);

// Least periods n <= N of receptive periodic points: n such that a closed
// path of length n carries a primitive label. Maps each to a witness word.
std::map<u64, std::string> receptive_lps_upto(const DeterministicPresentation& dp,
                                              u64 horizon);

struct LayerGraph {
  std::size_t index = 0;
  // subsets[v] is the set of source vertices behind layer vertex v.
  std::vector<std::vector<std::size_t>> subsets;
  LabeledGraph graph;
};

// Vertices are the i-subsets; one a-labeled edge U -> V for each perfect
// matching of U onto V by a-labeled edges. Layer 1 is a copy of lg.
LayerGraph layer_graph(const LabeledGraph& lg, std::size_t i);

struct LayerSupport {
  std::size_t layer = 0;
  std::size_t component = 0;  // component index in scc_decompose(layer graph)
  std::set<u64> periods;
  std::vector<PeriodWitness> witnesses;
};

// For each periodic point of least period n <= N: the largest number k of
// mutually separated presentations, and the components of layer k carrying
// such a family. Supports are grouped by (layer, component).
std::vector<LayerSupport> unique_preimage_lps(const LabeledGraph& lg, u64 horizon,
                                              std::size_t word_limit = 2'000'000);

}  // namespace periodlab
