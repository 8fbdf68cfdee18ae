#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>

#include "periodlab/classification.hpp"
#include "periodlab/counting.hpp"
#include "periodlab/gapshift.hpp"
#include "periodlab/io.hpp"
#include "periodlab/realize.hpp"
#include "periodlab/sofic.hpp"
#include "periodlab/zeta.hpp"

namespace periodlab::cli {

u64 resolve_oracle_cap(const std::optional<u64>& flag)
{
  if (flag)
    return *flag;
  if (const char* env = std::getenv("PERIODLAB_ORACLE_CAP")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size())
        return v;
    } catch (const std::exception&) {
    }
    throw ParseError("PERIODLAB_ORACLE_CAP", 0, 0, "", "expected a nonnegative integer");
  }
  return 20;
}

namespace {

class OracleDisagreement : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::string text;
  Json json;
  InputKind kind;
};

Loaded load(const std::string& path)
{
  if (path.empty())
    throw ParseError("<command line>", 0, 0, "", "--input is required");
  Loaded l;
  l.text = read_text_file(path);
  l.json = parse_json_text(l.text, path);
  l.kind = detect_input_kind(l.json, path);
  return l;
}

Json big(const BigInt& v)
{
  if (v <= std::numeric_limits<std::int64_t>::max() && v >= std::numeric_limits<std::int64_t>::min())
    return static_cast<std::int64_t>(v);
  return v.str();
}

Json counts_json(const CountTable& t)
{
  Json rows = Json::array();
  for (u64 n = 1; n <= t.horizon; ++n)
    rows.push_back({{"n", n}, {"p", big(t.p[n - 1])}, {"q", big(t.q[n - 1])}});
  return rows;
}

Json set_json(const std::set<u64>& s)
{
  return Json(s);
}

// ---- oracles ------------------------------------------------------------

struct PathOracle {
  u64 cap = 0;
  std::vector<BigInt> p, q;
  std::map<u64, std::vector<std::size_t>> witness;  // least period -> path
};

// Brute force over closed edge paths; the cap shrinks until the
// enumeration fits its budget.
PathOracle path_oracle(const DirectedMultigraph& g, u64 cap)
{
  PathOracle o;
  while (true) {
    try {
      const ClosedPathTable table = enumerate_closed_paths(g, cap);
      o.cap = cap;
      o.p.assign(cap, 0);
      o.q.assign(cap, 0);
      for (const auto& [len, paths] : table) {
        if (len == 0 || len > cap)
          continue;
        o.p[len - 1] = paths.size();
        for (const auto& path : paths) {
          // Least rotation period of the edge sequence.
          std::size_t per = len;
          for (std::size_t d : divisors(len)) {
            bool rot = true;
            for (std::size_t k = 0; k < len && rot; ++k)
              rot = path[k] == path[(k + d) % len];
            if (rot) {
              per = d;
              break;
            }
          }
          if (per == len) {
            o.q[len - 1] += 1;
            o.witness.emplace(len, path);
          }
        }
      }
      return o;
    } catch (const ResourceLimitExceeded&) {
      if (cap == 0)
        throw;
      cap = cap * 3 / 4;
    }
  }
}

struct WordOracle {
  u64 cap = 0;
  std::vector<BigInt> p;
};

// p_n as the number of words w of length n such that some vertex returns to
// itself along repeated readings of w: boolean reachability matrix of w,
// then peeling of sources.
WordOracle word_oracle(const LabeledGraph& lg, u64 cap)
{
  const DirectedMultigraph& g = lg.graph();
  const std::size_t nv = g.vertex_count();
  const std::string alphabet = lg.alphabet();
  WordOracle o;
  if (nv == 0 || alphabet.empty()) {
    o.cap = cap;
    o.p.assign(cap, 0);
    return o;
  }
  // Budget on words * length * edges.
  const double budget = 3e8;
  double work = 0;
  u64 c = 0;
  while (c < cap) {
    work += std::pow(static_cast<double>(alphabet.size()), c + 1) * (c + 1) *
            static_cast<double>(std::max<std::size_t>(g.edge_count(), 1));
    if (work > budget)
      break;
    ++c;
  }
  o.cap = c;
  o.p.assign(c, 0);

  using Mat = std::vector<std::vector<bool>>;
  std::vector<Mat> step(alphabet.size(), Mat(nv, std::vector<bool>(nv, false)));
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto a = alphabet.find(lg.label(e));
    step[a][g.edges()[e].from][g.edges()[e].to] = true;
  }
  auto compose = [nv](const Mat& x, const Mat& y) {
    Mat z(nv, std::vector<bool>(nv, false));
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t k = 0; k < nv; ++k)
        if (x[i][k])
          for (std::size_t j = 0; j < nv; ++j)
            if (y[k][j])
              z[i][j] = true;
    return z;
  };
  auto cyclic = [nv](const Mat& m) {
    std::vector<std::size_t> indeg(nv, 0);
    for (std::size_t i = 0; i < nv; ++i)
      for (std::size_t j = 0; j < nv; ++j)
        indeg[j] += m[i][j];
    std::vector<std::size_t> stack;
    for (std::size_t v = 0; v < nv; ++v)
      if (indeg[v] == 0)
        stack.push_back(v);
    std::size_t removed = 0;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      ++removed;
      for (std::size_t j = 0; j < nv; ++j)
        if (m[v][j] && --indeg[j] == 0)
          stack.push_back(j);
    }
    return removed < nv;
  };

  Mat id(nv, std::vector<bool>(nv, false));
  for (std::size_t v = 0; v < nv; ++v)
    id[v][v] = true;
  std::vector<Mat> prefix{id};
  std::function<void(u64)> walk = [&](u64 depth) {
    for (std::size_t a = 0; a < alphabet.size(); ++a) {
      prefix.push_back(compose(prefix.back(), step[a]));
      if (cyclic(prefix.back()))
        o.p[depth] += 1;
      if (depth + 1 < c)
        walk(depth + 1);
      prefix.pop_back();
    }
  };
  if (c > 0)
    walk(0);
  return o;
}

// ---- analyze -------------------------------------------------------------

struct Analysis {
  Json report;
  CountTable table;
  std::string dot;
  bool agree = true;
};

Analysis analyze_graph(const DirectedMultigraph& g, u64 horizon, u64 cap)
{
  Analysis a;
  a.table = count_table(g, horizon);
  const PeriodSetDescriptor ps = ps_descriptor(g);
  const PeriodSetDescriptor lps = lps_descriptor_sft(g);
  Json& r = a.report;
  r["vertices"] = g.vertex_count();
  r["edges"] = g.edge_count();
  r["counts"] = counts_json(a.table);
  r["ps"] = to_json(ps);
  r["lps"] = to_json(lps);
  r["ps_text"] = ps.to_string();
  r["lps_text"] = lps.to_string();
  r["zeta"] = to_json(zeta_of_graph(g));
  Json comps = Json::array();
  for (const auto& c : analyze_components(g)) {
    Json ids = Json::array();
    for (std::size_t v : c.vertices)
      ids.push_back(g.vertex_ids()[v]);
    comps.push_back({{"vertices", ids}, {"period", c.period}, {"ps", c.ps.to_string()},
                     {"lps", c.lps.to_string()}});
  }
  r["components"] = std::move(comps);

  // Exact counts against the descriptors over the whole horizon.
  bool consistent = true;
  for (u64 n = 1; n <= horizon; ++n) {
    consistent &= lps.contains(n) == (a.table.q[n - 1] > 0);
    consistent &= ps.contains(n) == (a.table.p[n - 1] > 0);
  }

  const PathOracle o = path_oracle(g, std::min(horizon, cap));
  bool agree = true;
  Json witnesses = Json::array();
  for (u64 n = 1; n <= o.cap; ++n) {
    agree &= o.p[n - 1] == a.table.p[n - 1] && o.q[n - 1] == a.table.q[n - 1];
    if (auto it = o.witness.find(n); it != o.witness.end()) {
      Json path = Json::array();
      for (std::size_t e : it->second)
        path.push_back(g.edges()[e].id);
      witnesses.push_back({{"period", n}, {"path", path}});
    }
  }
  r["witnesses"] = std::move(witnesses);
  r["oracle"] = {{"method", "closed_path_enumeration"},
                 {"requested_cap", cap},
                 {"cap", o.cap},
                 {"counts_agree", agree},
                 {"descriptors_agree", consistent}};
  a.agree = agree && consistent;
  a.dot = to_dot(g);
  return a;
}

Analysis analyze_labeled(const LabeledGraph& lg, u64 horizon, u64 cap)
{
  Analysis a;
  const SoficPeriods sp = sofic_lps_upto(lg, horizon);
  a.table = sp.counts;
  Json& r = a.report;
  r["vertices"] = lg.graph().vertex_count();
  r["edges"] = lg.graph().edge_count();
  r["alphabet"] = lg.alphabet();
  r["counts"] = counts_json(sp.counts);
  r["lps_upto"] = set_json(sp.periods);
  r["witnesses"] = to_json(sp.witnesses);
  r["right_resolving"] = is_right_resolving(lg);
  const DeterministicPresentation dp = determinize_and_minimize(lg);
  r["fischer_cover_states"] = dp.minimal ? Json(dp.graph.graph().vertex_count()) : Json(nullptr);

  const WordOracle o = word_oracle(lg, std::min(horizon, cap));
  bool agree = true;
  for (u64 n = 1; n <= o.cap; ++n)
    agree &= o.p[n - 1] == sp.counts.p[n - 1];
  r["oracle"] = {{"method", "word_enumeration"},
                 {"requested_cap", cap},
                 {"cap", o.cap},
                 {"counts_agree", agree}};
  a.agree = agree;
  a.dot = to_dot(lg);
  return a;
}

Analysis analyze_gap(const GapSet& s, u64 horizon, u64 cap)
{
  const LabeledGraph lg = gap_to_labeled_graph(s);
  Analysis a = analyze_labeled(lg, horizon, cap);
  const PeriodSetDescriptor lps = gap_lps(s);
  bool cross = true;
  for (u64 n = 1; n <= horizon; ++n)
    cross &= lps.contains(n) == (a.table.q[n - 1] > 0);
  Json r;
  r["class"] = classify_gap(s) == GapClass::sft ? "sft" : "sofic_not_sft";
  r["lps"] = to_json(lps);
  r["lps_text"] = lps.to_string();
  for (auto& [k, v] : a.report.items())
    r["presentation_" + k] = v;
  r["oracle"] = a.report["oracle"];
  r["oracle"]["presentation_agrees"] = cross;
  r.erase("presentation_oracle");
  a.report = std::move(r);
  a.agree = a.agree && cross;
  return a;
}

DirectedMultigraph as_graph(const Loaded& l, const std::string& source)
{
  if (l.kind == InputKind::graph)
    return graph_from_json(l.json, source);
  if (l.kind == InputKind::forbidden_words)
    return higher_block_recode(forbidden_words_from_json(l.json, source));
  throw ShapeError(source + ": expected a graph or forbidden-word input, got " + to_string(l.kind));
}

// ---- commands ------------------------------------------------------------

struct Output {
  Json report;
  std::string text;       // replaces the report on stdout when set
  std::string artifact;   // written to --output for realize
  bool failed_check = false;
  std::string note;       // stderr line
};

u64 effective_horizon(const Options& opts)
{
  if (opts.horizon)
    return opts.horizon;
  if (opts.command == "realize")
    return 40;
  if (opts.command == "layers")
    return 10;
  return 20;
}

Output cmd_analyze(const Options& opts, const Loaded& l)
{
  const u64 horizon = effective_horizon(opts);
  const u64 cap = resolve_oracle_cap(opts.oracle_cap);
  Analysis a;
  switch (l.kind) {
    case InputKind::graph:
    case InputKind::forbidden_words:
      a = analyze_graph(as_graph(l, opts.input), horizon, cap);
      break;
    case InputKind::labeled_graph:
      a = analyze_labeled(labeled_graph_from_json(l.json, opts.input), horizon, cap);
      break;
    case InputKind::gap_set:
      a = analyze_gap(gap_set_from_json(l.json, opts.input), horizon, cap);
      break;
    default:
      throw ShapeError("analyze takes a graph, labeled graph, gap set or forbidden-word input");
  }
  Output out;
  out.report = std::move(a.report);
  if (opts.format == "csv")
    out.text = count_table_csv(a.table);
  else if (opts.format == "dot")
    out.text = a.dot;
  out.failed_check = !a.agree;
  if (!a.agree)
    out.note = "oracle disagreement (see report.oracle)";
  return out;
}

Output cmd_realize(const Options& opts, const Loaded& l)
{
  if (l.kind != InputKind::descriptor)
    throw ShapeError("realize takes a descriptor input");
  const PeriodSetDescriptor desc = descriptor_from_json(l.json, opts.input);
  const u64 horizon = effective_horizon(opts);
  const std::string target = opts.target.empty() ? "irreducible_sft" : opts.target;

  Output out;
  Json& r = out.report;
  r["target"] = target;
  r["request"] = to_json(desc);
  r["request_text"] = desc.to_string();

  Json artifact;
  std::string dot;
  bool pass = false;
  Json produced;
  auto sofic_round_trip = [&](const LabeledGraph& lg) {
    const SoficPeriods sp = sofic_lps_upto(lg, horizon);
    const auto want = desc.members_upto(horizon);
    produced = set_json(sp.periods);
    pass = std::set<u64>(want.begin(), want.end()) == sp.periods && is_irreducible(lg.graph());
    artifact = to_json(lg);
    dot = to_dot(lg);
  };

  if (target == "gap_shift") {
    const GapSet s = gap_realize(desc);
    const PeriodSetDescriptor back = gap_lps(s);
    produced = back.to_string();
    pass = back == desc;
    artifact = to_json(s);
  } else {
    const auto t = parse_realize_target(target);
    if (!t)
      throw ParseError("<command line>", 0, 0, "", "unknown target '" + target + "'");
    switch (*t) {
      case RealizeTarget::irreducible_sft:
      case RealizeTarget::reducible_sft: {
        const DirectedMultigraph g = *t == RealizeTarget::irreducible_sft
                                         ? realize_irreducible_sft(desc)
                                         : realize_reducible_sft(desc);
        const PeriodSetDescriptor back = lps_descriptor_sft(g);
        produced = back.to_string();
        pass = back == desc && (*t == RealizeTarget::reducible_sft || is_irreducible(g));
        artifact = to_json(g);
        dot = to_dot(g);
        break;
      }
      case RealizeTarget::irreducible_sofic: {
        const SoficRealization sr = realize_sofic_detailed(desc);
        Json tori = Json::array();
        for (const auto& t : sr.tori)
          tori.push_back({{"d", t.d}, {"k", t.k}, {"u", t.u}, {"v", t.v}, {"t", t.t}});
        Json cycles = Json::array();
        for (const auto& [j, c] : sr.cycles)
          cycles.push_back({{"j", j}, {"c", c}});
        r["construction"] = {{"d_star", sr.d_star},
                             {"k_star", sr.k_star},
                             {"tori", std::move(tori)},
                             {"missed", set_json(sr.missed)},
                             {"cycles", std::move(cycles)}};
        sofic_round_trip(sr.graph);
        break;
      }
      case RealizeTarget::period_set_variant:
        sofic_round_trip(realize_period_set(desc));
        break;
      case RealizeTarget::arbitrary_subshift: {
        if (desc.empty())
          throw ShapeError("least period set must be nonempty");
        const ArbitrarySubshift h = desc.is_finite()
                                        ? realize_arbitrary(std::vector<u64>(desc.finite().begin(),
                                                                             desc.finite().end()))
                                        : realize_arbitrary([desc](u64 n) { return desc.contains(n); });
        const auto want = desc.members_upto(horizon);
        const std::set<u64> got = h.least_periods_upto(horizon);
        produced = set_json(got);
        pass = got == std::set<u64>(want.begin(), want.end());
        artifact = to_json(h, 16);
        break;
      }
    }
  }

  r["round_trip"] = {{"horizon", horizon}, {"produced", produced}, {"pass", pass}};
  out.failed_check = !pass;
  if (opts.format == "dot") {
    if (dot.empty())
      throw ParseError("<command line>", 0, 0, "", "target " + target + " has no DOT form");
    out.artifact = dot;
  } else {
    out.artifact = artifact.dump(2) + "\n";
  }
  if (opts.output.empty()) {
    if (opts.format == "dot")
      out.text = dot;
    else
      r["artifact"] = std::move(artifact);
  }
  out.note = std::string("round trip ") + (pass ? "pass" : "FAIL");
  return out;
}

Output cmd_embed_check(const Options& opts, const Loaded& x)
{
  if (opts.into.empty())
    throw ParseError("<command line>", 0, 0, "", "--into is required");
  const Loaded y = load(opts.into);
  const u64 horizon = effective_horizon(opts);
  const KriegerVerdict v = krieger_check(as_graph(x, opts.input), as_graph(y, opts.into), horizon);
  Output out;
  out.report["into_digest"] = fnv1a_hex(y.text);
  out.report["verdict"] = to_json(v);
  out.note = to_string(v.kind);
  return out;
}

Output cmd_layers(const Options& opts, const Loaded& l)
{
  if (l.kind != InputKind::labeled_graph)
    throw ShapeError("layers takes a labeled graph");
  const LabeledGraph lg = labeled_graph_from_json(l.json, opts.input);
  const u64 horizon = effective_horizon(opts);
  Output out;
  Json& r = out.report;
  Json sizes = Json::array();
  for (std::size_t i = 1; i <= lg.graph().vertex_count(); ++i) {
    const LayerGraph layer = layer_graph(lg, i);
    sizes.push_back({{"layer", i},
                     {"vertices", layer.graph.graph().vertex_count()},
                     {"edges", layer.graph.graph().edge_count()}});
  }
  r["layers"] = std::move(sizes);
  Json supports = Json::array();
  for (const auto& s : unique_preimage_lps(lg, horizon))
    supports.push_back({{"layer", s.layer},
                        {"component", s.component},
                        {"periods", set_json(s.periods)},
                        {"witnesses", to_json(s.witnesses)}});
  r["supports"] = std::move(supports);
  const DeterministicPresentation dp = determinize_and_minimize(lg);
  r["minimal"] = dp.minimal;
  r["deterministic_states"] = dp.graph.graph().vertex_count();
  if (dp.minimal) {
    r["synchronizing_words"] = synchronizing_words_upto(dp, std::min<u64>(horizon, 4));
    Json rec = Json::object();
    for (const auto& [n, w] : receptive_lps_upto(dp, horizon))
      rec[std::to_string(n)] = w;
    r["receptive_lps"] = std::move(rec);
  }
  return out;
}

}  // namespace

Result run(const Options& opts)
{
  Result res;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (opts.format != "json" && opts.format != "csv" && opts.format != "dot")
      throw ParseError("<command line>", 0, 0, "", "unknown format '" + opts.format + "'");
    if (opts.format == "csv" && opts.command != "analyze")
      throw ParseError("<command line>", 0, 0, "", "csv output is only available for analyze");

    const Loaded l = load(opts.input);
    Output o;
    if (opts.command == "analyze")
      o = cmd_analyze(opts, l);
    else if (opts.command == "realize")
      o = cmd_realize(opts, l);
    else if (opts.command == "embed-check")
      o = cmd_embed_check(opts, l);
    else if (opts.command == "layers")
      o = cmd_layers(opts, l);
    else
      throw ParseError("<command line>", 0, 0, "", "unknown command '" + opts.command + "'");

    Json report;
    report["command"] = opts.command;
    report["input_kind"] = to_string(l.kind);
    report["input_digest"] = fnv1a_hex(l.text);
    report["horizon"] = effective_horizon(opts);
    report["seed"] = opts.seed;
    for (auto& [k, v] : o.report.items())
      report[k] = std::move(v);
    if (opts.timing)
      report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    const std::string report_text = report.dump(2) + "\n";

    if (opts.command == "realize" && !opts.output.empty()) {
      std::ofstream(opts.output, std::ios::binary) << o.artifact;
      res.out = o.text.empty() ? report_text : o.text;
    } else if (!opts.output.empty()) {
      std::ofstream(opts.output, std::ios::binary) << (o.text.empty() ? report_text : o.text);
    } else {
      res.out = o.text.empty() ? report_text : o.text;
    }
    if (!o.note.empty())
      res.err = o.note + "\n";
    res.exit_code = o.failed_check ? oracle_disagreement : ok;
  } catch (const ParseError& e) {
    res.err = std::string("parse error: ") + e.what() + "\n";
    res.exit_code = parse_error;
  } catch (const nlohmann::json::exception& e) {
    res.err = std::string("parse error: ") + e.what() + "\n";
    res.exit_code = parse_error;
  } catch (const ResourceLimitExceeded& e) {
    res.err = std::string("resource limit: ") + e.what() + "\n";
    res.exit_code = resource_limit;
  } catch (const std::invalid_argument& e) {
    res.err = std::string("rejected: ") + e.what() + "\n";
    res.exit_code = shape_error;
  } catch (const std::exception& e) {
    res.err = std::string("error: ") + e.what() + "\n";
    res.exit_code = 1;
  }
  return res;
}

}  // namespace periodlab::cli
