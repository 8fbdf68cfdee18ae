#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "periodlab/relation.hpp"
#include "periodlab/sofic.hpp"

namespace periodlab {

namespace {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k)
{
  std::vector<std::vector<std::size_t>> out;
  if (k > n)
    return out;
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      break;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j)
      c[j] = c[j - 1] + 1;
  }
  return out;
}

// Kuhn's augmenting paths on the bipartite graph u -> candidates[u].
bool has_perfect_matching(const std::vector<std::vector<std::size_t>>& candidates,
                          std::size_t right)
{
  std::vector<long> owner(right, -1);
  for (std::size_t u = 0; u < candidates.size(); ++u) {
    std::vector<bool> used(right, false);
    std::function<bool(std::size_t)> augment = [&](std::size_t x) {
      for (std::size_t y : candidates[x]) {
        if (used[y])
          continue;
        used[y] = true;
        if (owner[y] < 0 || augment(static_cast<std::size_t>(owner[y]))) {
          owner[y] = static_cast<long>(x);
          return true;
        }
      }
      return false;
    };
    if (!augment(u))
      return false;
  }
  return true;
}

}  // namespace

LayerGraph layer_graph(const LabeledGraph& lg, std::size_t i)
{
  if (i == 0)
    throw std::invalid_argument("layer index must be positive");
  const DirectedMultigraph& g = lg.graph();
  LayerGraph layer;
  layer.index = i;
  const auto subsets = combinations(g.vertex_count(), i);
  if (subsets.empty())
    return layer;

  std::vector<std::string> ids;
  for (const auto& s : subsets) {
    std::string id = "{";
    for (std::size_t k = 0; k < s.size(); ++k)
      id += (k ? "," : "") + g.vertex_ids()[s[k]];
    ids.push_back(id + "}");
  }

  const std::string alphabet = lg.alphabet();
  std::vector<EdgeSpec> edges;
  std::vector<char> labels;
  std::size_t counter = 0;
  for (std::size_t a = 0; a < alphabet.size(); ++a) {
    for (std::size_t su = 0; su < subsets.size(); ++su) {
      const auto& U = subsets[su];
      for (std::size_t sv = 0; sv < subsets.size(); ++sv) {
        const auto& V = subsets[sv];
        // a-edges from each member of U into V, as (edge, slot in V).
        std::vector<std::vector<std::pair<std::size_t, std::size_t>>> options(i);
        std::vector<std::vector<std::size_t>> slots(i);
        for (std::size_t k = 0; k < i; ++k) {
          for (std::size_t e : g.out_edges(U[k])) {
            if (lg.label(e) != alphabet[a])
              continue;
            auto it = std::lower_bound(V.begin(), V.end(), g.edges()[e].to);
            if (it != V.end() && *it == g.edges()[e].to) {
              const auto slot = static_cast<std::size_t>(it - V.begin());
              options[k].emplace_back(e, slot);
              slots[k].push_back(slot);
            }
          }
        }
        if (!has_perfect_matching(slots, i))
          continue;
        // One layer edge per perfect matching.
        std::vector<bool> taken(i, false);
        std::function<void(std::size_t)> extend = [&](std::size_t k) {
          if (k == i) {
            edges.push_back({"m" + std::to_string(counter++), ids[su], ids[sv]});
            labels.push_back(alphabet[a]);
            return;
          }
          for (auto [e, slot] : options[k]) {
            if (taken[slot])
              continue;
            taken[slot] = true;
            extend(k + 1);
            taken[slot] = false;
          }
        };
        extend(0);
      }
    }
  }

  // The graph orders edges by insertion and vertices by id; keep labels in
  // edge order and subsets in vertex order.
  DirectedMultigraph lgraph(ids, edges);
  layer.subsets.resize(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s)
    layer.subsets[*lgraph.vertex_index(ids[s])] = subsets[s];
  layer.graph = LabeledGraph(std::move(lgraph), std::move(labels));
  return layer;
}

namespace {

bool is_least_rotation(const std::string& w)
{
  for (std::size_t r = 1; r < w.size(); ++r) {
    if (w.substr(r) + w.substr(0, r) < w)
      return false;
  }
  return true;
}

}  // namespace

std::vector<LayerSupport> unique_preimage_lps(const LabeledGraph& lg, u64 horizon,
                                              std::size_t word_limit)
{
  const std::size_t nv = lg.graph().vertex_count();
  const std::string alphabet = lg.alphabet();
  if (nv == 0 || alphabet.empty())
    return {};

  // A family of k mutually separated periodic presentations of w^inf is the
  // same thing as a cycle of w's transition relation in layer k (the family
  // occupies k distinct vertices at every time, and consecutive positions
  // are matched by edges carrying the current symbol).
  struct Layer {
    LayerGraph layer;
    SccDecomposition scc;
    std::vector<Relation> letters;
  };
  std::vector<Layer> layers(nv + 1);
  for (std::size_t k = 1; k <= nv; ++k) {
    Layer& l = layers[k];
    l.layer = layer_graph(lg, k);
    l.scc = scc_decompose(l.layer.graph.graph());
    for (char a : alphabet)
      l.letters.push_back(Relation::of_label(l.layer.graph, a));
  }

  std::map<std::pair<std::size_t, std::size_t>, LayerSupport> supports;
  auto record = [&](const std::string& w, const std::vector<Relation>& rels) {
    for (std::size_t k = nv; k >= 1; --k) {
      if (rels[k].empty() || !rels[k].has_cycle())
        continue;
      std::set<std::size_t> comps;
      for (std::size_t v : rels[k].cyclic_vertices().members())
        comps.insert(layers[k].scc.component_of[v]);
      for (std::size_t c : comps) {
        LayerSupport& sup = supports[{k, c}];
        sup.layer = k;
        sup.component = c;
        if (sup.periods.insert(w.size()).second)
          sup.witnesses.push_back({w.size(), w, k, c});
      }
      return;
    }
  };

  // Depth-first over words with a nonempty relation; one canonical word per
  // periodic orbit.
  std::size_t visited = 0;
  std::string word;
  std::vector<std::vector<Relation>> stack(1);
  for (std::size_t k = 0; k <= nv; ++k)
    stack[0].push_back(k == 0 ? Relation() : Relation::identity(layers[k].layer.subsets.size()));
  std::function<void()> dfs = [&]() {
    if (word.size() == horizon)
      return;
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      std::vector<Relation> next(nv + 1);
      for (std::size_t k = 1; k <= nv; ++k)
        next[k] = stack.back()[k].then(layers[k].letters[a]);
      if (next[1].empty())
        continue;
      if (++visited > word_limit)
        throw ResourceLimitExceeded("unique-preimage search exceeded its word budget");
      word.push_back(alphabet[a]);
      if (next[1].has_cycle() && is_primitive_word(word) && is_least_rotation(word))
        record(word, next);
      stack.push_back(std::move(next));
      dfs();
      stack.pop_back();
      word.pop_back();
    }
  };
  dfs();

  std::vector<LayerSupport> out;
  for (auto& [key, sup] : supports)
    out.push_back(std::move(sup));
  return out;
}

}  // namespace periodlab
