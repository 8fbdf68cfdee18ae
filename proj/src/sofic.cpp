#include "periodlab/sofic.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "periodlab/relation.hpp"

namespace periodlab {

LabeledGraph::LabeledGraph(DirectedMultigraph g, std::vector<char> labels)
    : g_(std::move(g)), labels_(std::move(labels))
{
  if (labels_.size() != g_.edge_count())
    throw std::invalid_argument("every edge needs exactly one label");
}

std::string LabeledGraph::alphabet() const
{
  std::string a(labels_.begin(), labels_.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

LabeledGraph essential_part(const LabeledGraph& lg)
{
  const DirectedMultigraph& g = lg.graph();
  const std::size_t n = g.vertex_count();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> indeg(n, 0), outdeg(n, 0);
  for (const Edge& e : g.edges()) {
    ++outdeg[e.from];
    ++indeg[e.to];
  }
  std::deque<std::size_t> dead;
  for (std::size_t v = 0; v < n; ++v) {
    if (indeg[v] == 0 || outdeg[v] == 0) {
      alive[v] = false;
      dead.push_back(v);
    }
  }
  while (!dead.empty()) {
    const std::size_t v = dead.front();
    dead.pop_front();
    for (std::size_t e : g.out_edges(v)) {
      const std::size_t w = g.edges()[e].to;
      if (alive[w] && --indeg[w] == 0) {
        alive[w] = false;
        dead.push_back(w);
      }
    }
    for (std::size_t e : g.in_edges(v)) {
      const std::size_t u = g.edges()[e].from;
      if (alive[u] && --outdeg[u] == 0) {
        alive[u] = false;
        dead.push_back(u);
      }
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v])
      keep.push_back(v);
  }
  if (keep.size() == n)
    return lg;
  std::vector<char> labels;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (alive[g.edges()[e].from] && alive[g.edges()[e].to])
      labels.push_back(lg.label(e));
  }
  return LabeledGraph(g.induced(keep), std::move(labels));
}

namespace {

// Lexicographically first primitive word w of length n with a cyclic
// relation, pruned by the relations realisable by the remaining suffix.
std::string search_witness(const std::vector<Relation>& letters, const std::string& alphabet,
                           const std::vector<std::vector<Relation>>& suffixes, u64 n,
                           std::size_t budget)
{
  const std::size_t vertices = letters.front().size();
  std::string word;
  std::vector<Relation> prefix{Relation::identity(vertices)};
  std::vector<std::size_t> choice{0};
  std::size_t nodes = 0;
  while (!choice.empty()) {
    if (++nodes > budget)
      return {};
    const std::size_t depth = word.size();
    if (choice.back() >= alphabet.size()) {
      choice.pop_back();
      prefix.pop_back();
      if (!word.empty())
        word.pop_back();
      continue;
    }
    const std::size_t a = choice.back()++;
    Relation next = prefix.back().then(letters[a]);
    if (next.empty())
      continue;
    const u64 rest = n - depth - 1;
    if (rest == 0) {
      std::string w = word + alphabet[a];
      if (next.has_cycle() && is_primitive_word(w))
        return w;
      continue;
    }
    const bool extendable =
        std::any_of(suffixes[rest].begin(), suffixes[rest].end(),
                    [&](const Relation& s) { return next.then(s).has_cycle(); });
    if (!extendable)
      continue;
    word.push_back(alphabet[a]);
    prefix.push_back(std::move(next));
    choice.push_back(0);
  }
  return {};
}

}  // namespace

SoficPeriods sofic_lps_upto(const LabeledGraph& lg, u64 horizon, std::size_t relation_limit)
{
  if (horizon == 0)
    throw std::invalid_argument("sofic_lps_upto: horizon must be positive");
  SoficPeriods out;
  const std::string alphabet = lg.alphabet();
  const std::size_t n = lg.graph().vertex_count();
  if (n == 0 || alphabet.empty()) {
    out.counts = count_table_from_periodic(std::vector<BigInt>(horizon, 0));
    return out;
  }
  std::vector<Relation> letters;
  for (char a : alphabet)
    letters.push_back(Relation::of_label(lg, a));

  struct Entry {
    u64 count = 0;
    std::string rep;  // smallest word found with this relation
  };
  // keys[k] lists the relations of words of length k (keys[0] = identity).
  std::vector<std::vector<Relation>> keys{{Relation::identity(n)}};
  std::map<Relation, Entry> level;
  level.emplace(Relation::identity(n), Entry{1, ""});
  std::vector<BigInt> p(horizon, 0);
  std::vector<std::string> rep_witness(horizon + 1);

  for (u64 len = 1; len <= horizon; ++len) {
    std::map<Relation, Entry> next;
    for (const auto& [rel, entry] : level) {
      for (std::size_t a = 0; a < letters.size(); ++a) {
        Relation r = rel.then(letters[a]);
        if (r.empty())
          continue;
        std::string w = entry.rep + alphabet[a];
        auto [it, inserted] = next.try_emplace(std::move(r), Entry{0, w});
        if (it->second.count > std::numeric_limits<u64>::max() - entry.count)
          throw ResourceLimitExceeded("periodic word count overflows 64 bits");
        it->second.count += entry.count;
        if (!inserted && w < it->second.rep)
          it->second.rep = std::move(w);
      }
    }
    if (next.size() > relation_limit)
      throw ResourceLimitExceeded("more than " + std::to_string(relation_limit) +
                                  " live transition relations");
    level = std::move(next);
    std::vector<Relation> k;
    k.reserve(level.size());
    u64 periodic = 0;
    for (const auto& [rel, entry] : level) {
      k.push_back(rel);
      if (rel.has_cycle()) {
        periodic += entry.count;
        if (is_primitive_word(entry.rep) &&
            (rep_witness[len].empty() || entry.rep < rep_witness[len]))
          rep_witness[len] = entry.rep;
      }
    }
    p[len - 1] = periodic;
    keys.push_back(std::move(k));
  }

  out.counts = count_table_from_periodic(std::move(p));
  for (u64 len = 1; len <= horizon; ++len) {
    if (out.counts.q[len - 1] <= 0)
      continue;
    out.periods.insert(len);
    std::string w = rep_witness[len];
    if (w.empty())
      w = search_witness(letters, alphabet, keys, len, 200'000);
    out.witnesses.push_back({len, w, 1, 0});
  }
  return out;
}

bool is_right_resolving(const LabeledGraph& lg)
{
  const DirectedMultigraph& g = lg.graph();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::string seen;
    for (std::size_t e : g.out_edges(v)) {
      if (seen.find(lg.label(e)) != std::string::npos)
        return false;
      seen.push_back(lg.label(e));
    }
  }
  return true;
}

namespace {

// Deterministic automaton, all states accepting; -1 marks a missing move.
struct Dfa {
  std::string alphabet;
  std::vector<std::vector<long>> next;
};

LabeledGraph dfa_graph(const Dfa& dfa, const std::vector<std::size_t>& states)
{
  std::vector<long> index(dfa.next.size(), -1);
  for (std::size_t k = 0; k < states.size(); ++k)
    index[states[k]] = static_cast<long>(k);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<char> labels;
  for (std::size_t k = 0; k < states.size(); ++k) {
    for (std::size_t a = 0; a < dfa.alphabet.size(); ++a) {
      const long t = dfa.next[states[k]][a];
      if (t >= 0 && index[t] >= 0) {
        edges.emplace_back(k, static_cast<std::size_t>(index[t]));
        labels.push_back(dfa.alphabet[a]);
      }
    }
  }
  return LabeledGraph(DirectedMultigraph::from_edges(states.size(), edges), std::move(labels));
}

}  // namespace

DeterministicPresentation determinize_and_minimize(const LabeledGraph& input)
{
  const LabeledGraph lg = essential_part(input);
  const std::size_t n = lg.graph().vertex_count();
  if (n == 0)
    return {};
  const std::string alphabet = lg.alphabet();
  std::vector<Relation> letters;
  for (char a : alphabet)
    letters.push_back(Relation::of_label(lg, a));

  // Subset construction from the full state set.
  Dfa subset{alphabet, {}};
  std::vector<VertexSet> sets{VertexSet::full(n)};
  std::map<VertexSet, std::size_t> seen{{sets[0], 0}};
  for (std::size_t s = 0; s < sets.size(); ++s) {
    std::vector<long> row(alphabet.size(), -1);
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      VertexSet img = letters[a].image(sets[s]);
      if (img.empty())
        continue;
      auto [it, inserted] = seen.try_emplace(img, sets.size());
      if (inserted)
        sets.push_back(std::move(img));
      row[a] = static_cast<long>(it->second);
    }
    subset.next.push_back(std::move(row));
  }

  // Moore refinement; every state accepts, a missing move is its own class.
  const std::size_t m = sets.size();
  std::vector<std::size_t> cls(m, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::vector<long>, std::size_t> sig_ids;
    std::vector<std::size_t> refined(m);
    for (std::size_t s = 0; s < m; ++s) {
      std::vector<long> sig{static_cast<long>(cls[s])};
      for (long t : subset.next[s])
        sig.push_back(t < 0 ? -1 : static_cast<long>(cls[t]));
      auto [it, inserted] = sig_ids.try_emplace(std::move(sig), sig_ids.size());
      refined[s] = it->second;
    }
    const bool stable = sig_ids.size() == classes;
    cls = std::move(refined);
    classes = sig_ids.size();
    if (stable)
      break;
  }
  Dfa minimal{alphabet, std::vector<std::vector<long>>(classes)};
  for (std::size_t s = 0; s < m; ++s) {
    if (!minimal.next[cls[s]].empty())
      continue;
    std::vector<long> row;
    for (long t : subset.next[s])
      row.push_back(t < 0 ? -1 : static_cast<long>(cls[t]));
    minimal.next[cls[s]] = std::move(row);
  }
  // Class ids follow first occurrence in BFS order, so class 0 is the start.

  std::vector<std::size_t> all(classes);
  for (std::size_t k = 0; k < classes; ++k)
    all[k] = k;
  const LabeledGraph whole = dfa_graph(minimal, all);
  const SccDecomposition scc = scc_decompose(whole.graph());
  std::vector<bool> has_exit(scc.components.size(), false);
  for (auto [from, to] : scc.condensation)
    has_exit[from] = true;
  std::vector<std::size_t> terminal;
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    if (!has_exit[c] && scc.nontrivial[c])
      terminal.push_back(c);
  }

  if (terminal.size() == 1) {
    const std::vector<std::size_t>& sink = scc.components[terminal.front()];
    // Irreducible iff the sink component already reads the whole language:
    // walk the automaton from the start alongside the subset automaton of
    // the sink states.
    VertexSet sink_set(classes);
    for (std::size_t s : sink)
      sink_set.insert(s);
    std::vector<std::pair<std::size_t, VertexSet>> work{{0, sink_set}};
    std::set<std::pair<std::size_t, VertexSet>> visited{work.front()};
    bool equal = true;
    while (!work.empty() && equal) {
      auto [state, set] = work.back();
      work.pop_back();
      for (std::size_t a = 0; a < alphabet.size() && equal; ++a) {
        const long t = minimal.next[state][a];
        VertexSet img(classes);
        for (std::size_t s : set.members()) {
          const long u = minimal.next[s][a];
          if (u >= 0)
            img.insert(static_cast<std::size_t>(u));
        }
        if ((t < 0) != img.empty()) {
          equal = false;
          break;
        }
        if (t < 0)
          continue;
        std::pair<std::size_t, VertexSet> key{static_cast<std::size_t>(t), std::move(img)};
        if (visited.insert(key).second)
          work.push_back(std::move(key));
      }
    }
    if (equal)
      return {dfa_graph(minimal, sink), true};
  }
  return {essential_part(whole), false};
}

std::vector<std::string> synchronizing_words_upto(const DeterministicPresentation& dp,
                                                  std::size_t max_length)
{
  if (!dp.minimal)
    throw std::invalid_argument("synchronizing words need a minimal presentation");
  const LabeledGraph& lg = dp.graph;
  const std::string alphabet = lg.alphabet();
  const std::size_t n = lg.graph().vertex_count();
  std::vector<Relation> letters;
  for (char a : alphabet)
    letters.push_back(Relation::of_label(lg, a));

  std::vector<std::string> out;
  std::vector<std::pair<std::string, VertexSet>> layer{{"", VertexSet::full(n)}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::pair<std::string, VertexSet>> next;
    for (const auto& [w, set] : layer) {
      for (std::size_t a = 0; a < alphabet.size(); ++a) {
        VertexSet img = letters[a].image(set);
        if (img.empty())
          continue;
        if (img.count() == 1)
          out.push_back(w + alphabet[a]);
        next.emplace_back(w + alphabet[a], std::move(img));
      }
    }
    layer = std::move(next);
  }
  return out;
}

ReceptiveVerdict is_receptive(const DeterministicPresentation& dp, const std::string& w)
{
  if (!is_primitive_word(w))
    throw std::invalid_argument("is_receptive: word must not be a proper power");
  if (!dp.minimal)
    throw std::invalid_argument("is_receptive: presentation must be minimal");
  const LabeledGraph& lg = dp.graph;
  const DirectedMultigraph& g = lg.graph();
  for (std::size_t r = 0; r < w.size(); ++r) {
    const std::string rot = w.substr(r) + w.substr(0, r);
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
      std::size_t v = start;
      std::vector<std::size_t> path;
      for (char c : rot) {
        const auto& outs = g.out_edges(v);
        auto it = std::find_if(outs.begin(), outs.end(),
                               [&](std::size_t e) { return lg.label(e) == c; });
        if (it == outs.end())
          break;
        path.push_back(*it);
        v = g.edges()[*it].to;
      }
      if (path.size() == rot.size() && v == start)
        return {true, rot, path};
    }
  }
  return {};
}

std::map<u64, std::string> receptive_lps_upto(const DeterministicPresentation& dp, u64 horizon)
{
  if (!dp.minimal)
    throw std::invalid_argument("receptive_lps_upto: presentation must be minimal");
  const LabeledGraph& lg = dp.graph;
  const DirectedMultigraph& g = lg.graph();
  const std::size_t nv = g.vertex_count();
  std::map<u64, std::string> out;
  constexpr std::size_t budget = 5'000'000;
  std::size_t nodes = 0;

  for (std::size_t start = 0; start < nv; ++start) {
    // back[k][u]: some walk of length k leads from u to start.
    std::vector<std::vector<bool>> back(horizon + 1, std::vector<bool>(nv, false));
    back[0][start] = true;
    for (u64 k = 1; k <= horizon; ++k)
      for (const Edge& e : g.edges())
        if (back[k - 1][e.to])
          back[k][e.from] = true;

    for (u64 n = 1; n <= horizon; ++n) {
      if (out.count(n) || !back[n][start])
        continue;
      std::string word;
      std::vector<std::pair<std::size_t, std::size_t>> frames{{start, 0}};
      bool found = false;
      while (!frames.empty() && !found) {
        if (++nodes > budget)
          throw ResourceLimitExceeded("receptive period search exceeded its budget");
        auto& [v, pos] = frames.back();
        const auto& outs = g.out_edges(v);
        if (pos >= outs.size()) {
          frames.pop_back();
          if (!word.empty())
            word.pop_back();
          continue;
        }
        const std::size_t e = outs[pos++];
        const std::size_t w = g.edges()[e].to;
        const u64 rest = n - word.size() - 1;
        if (!back[rest][w])
          continue;
        word.push_back(lg.label(e));
        if (rest == 0) {
          found = is_primitive_word(word);
          if (!found)
            word.pop_back();
          continue;
        }
        frames.emplace_back(w, 0);
      }
      if (found)
        out.emplace(n, word);
    }
  }
  return out;
}

}  // namespace periodlab
