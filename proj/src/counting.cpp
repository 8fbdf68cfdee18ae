#include "periodlab/counting.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>

#include "periodlab/kernels.hpp"

namespace periodlab {

void validate(const ForbiddenWordSpec& spec)
{
  if (spec.alphabet.empty())
    throw std::invalid_argument("alphabet is empty");
  std::set<char> symbols(spec.alphabet.begin(), spec.alphabet.end());
  if (symbols.size() != spec.alphabet.size())
    throw std::invalid_argument("alphabet repeats a symbol");
  std::set<std::string> seen;
  for (const std::string& w : spec.forbidden) {
    if (w.empty())
      throw std::invalid_argument("forbidden word is empty");
    if (!seen.insert(w).second)
      throw std::invalid_argument("forbidden word '" + w + "' listed twice");
    for (char c : w) {
      if (!symbols.count(c))
        throw std::invalid_argument("forbidden word '" + w + "' uses a symbol outside the alphabet");
    }
  }
}

namespace {

bool allowed(const std::string& block, const std::vector<std::string>& forbidden)
{
  return std::none_of(forbidden.begin(), forbidden.end(), [&](const std::string& w) {
    return block.find(w) != std::string::npos;
  });
}

// All allowed words of the given length in lexicographic order of the
// alphabet as written.
std::vector<std::string> allowed_blocks(const ForbiddenWordSpec& spec, std::size_t length)
{
  std::vector<std::string> layer{""};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<std::string> next;
    for (const std::string& w : layer) {
      for (char c : spec.alphabet) {
        std::string x = w + c;
        if (allowed(x, spec.forbidden))
          next.push_back(std::move(x));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

}  // namespace

DirectedMultigraph higher_block_recode(const ForbiddenWordSpec& spec, std::size_t block_limit)
{
  validate(spec);
  std::size_t len = 2;
  for (const std::string& w : spec.forbidden)
    len = std::max(len, w.size());
  double blocks = 1;
  for (std::size_t k = 0; k < len; ++k)
    blocks *= static_cast<double>(spec.alphabet.size());
  if (blocks > static_cast<double>(block_limit))
    throw ResourceLimitExceeded("higher block recoding needs " + std::to_string(blocks) +
                                " candidate blocks");

  std::vector<std::string> vertices = allowed_blocks(spec, len - 1);
  std::vector<EdgeSpec> edges;
  for (const std::string& b : allowed_blocks(spec, len))
    edges.push_back({b, b.substr(0, len - 1), b.substr(1)});
  return DirectedMultigraph(std::move(vertices), edges);
}

CountTable count_table_from_periodic(std::vector<BigInt> p)
{
  CountTable t;
  t.horizon = p.size();
  t.q.assign(p.size(), 0);
  for (u64 n = 1; n <= t.horizon; ++n) {
    BigInt acc = 0;
    for (u64 k : divisors(n)) {
      const int mu = mobius(n / k);
      if (mu > 0)
        acc += p[k - 1];
      else if (mu < 0)
        acc -= p[k - 1];
    }
    t.q[n - 1] = std::move(acc);
  }
  t.p = std::move(p);
  return t;
}

CountTable count_table(const DirectedMultigraph& g, u64 horizon)
{
  if (horizon == 0)
    throw std::invalid_argument("count_table: horizon must be positive");
  return count_table_from_periodic(trace_sequence(g, horizon));
}

namespace {

struct LoopCertificate {
  u64 shortest_pair = 0;  // total length of two distinct first-return loops
  std::int64_t frobenius = -1;  // of the loop lengths divided by the period
};

// First-return loops at a vertex with two out-edges. Every closed walk at v
// is a concatenation of such loops, so their lengths generate (up to the
// period) the closed-walk lengths at v.
LoopCertificate loop_certificate(const DirectedMultigraph& h, u64 period)
{
  const std::size_t m = h.vertex_count();
  std::size_t v = m;
  for (std::size_t u = 0; u < m && v == m; ++u) {
    if (h.out_edges(u).size() >= 2)
      v = u;
  }
  if (v == m)
    throw std::logic_error("loop_certificate: component is a single cycle");

  auto sat = [](u64 a, u64 b) { return std::min<u64>(a + b, 2); };
  std::vector<u64> walks(m, 0);  // walks from v avoiding v, saturated at 2
  std::vector<u64> lengths;
  u64 loop_total = 0;
  u64 first = 0;
  u64 pair = 0;
  u64 g = 0;
  const u64 cap = static_cast<u64>(m) * m + 4 * m + 4;
  for (u64 k = 1; k <= cap; ++k) {
    std::vector<u64> next(m, 0);
    u64 loops = 0;
    const auto step = [&](std::size_t from, u64 count) {
      for (std::size_t e : h.out_edges(from)) {
        const std::size_t w = h.edges()[e].to;
        if (w == v)
          loops = sat(loops, count);
        else
          next[w] = sat(next[w], count);
      }
    };
    if (k == 1) {
      step(v, 1);
    } else {
      for (std::size_t u = 0; u < m; ++u) {
        if (u != v && walks[u] > 0)
          step(u, walks[u]);
      }
    }
    walks = std::move(next);
    if (loops > 0) {
      lengths.push_back(k);
      g = gcd_u64(g, k);
      if (pair == 0) {
        if (loops >= 2 && loop_total == 0)
          pair = 2 * k;
        else if (loop_total >= 1)
          pair = first + k;
        else
          first = k;
      }
      loop_total = sat(loop_total, loops);
    }
    if (pair != 0 && g == period && k >= m)
      break;
  }
  if (pair == 0 || g != period)
    throw std::logic_error("loop_certificate: search did not close");

  std::vector<u64> reduced;
  for (u64 l : lengths)
    reduced.push_back(l / period);
  return {pair, NumericalSemigroup(std::move(reduced)).frobenius()};
}

}  // namespace

std::vector<ComponentAnalysis> analyze_components(const DirectedMultigraph& g)
{
  const SccDecomposition scc = scc_decompose(g);
  std::vector<std::size_t> picked;
  for (std::size_t c = 0; c < scc.components.size(); ++c) {
    if (scc.nontrivial[c])
      picked.push_back(c);
  }
  std::vector<ComponentAnalysis> out(picked.size());
  std::vector<std::exception_ptr> failures(picked.size());

#pragma omp parallel for schedule(dynamic)
  for (std::size_t k = 0; k < picked.size(); ++k) try {
    ComponentAnalysis& a = out[k];
    a.vertices = scc.components[picked[k]];
    const DirectedMultigraph h = g.induced(a.vertices);
    std::vector<std::size_t> all(h.vertex_count());
    std::iota(all.begin(), all.end(), 0);
    a.period = component_period(h, all);
    a.single_cycle = h.edge_count() == h.vertex_count();
    const u64 d = a.period;
    if (a.single_cycle) {
      a.ps_threshold = d;
      a.lps_threshold = d;
      a.ps = PeriodSetDescriptor::tail(d);
      a.lps = PeriodSetDescriptor::singleton(d);
      continue;
    }
    const LoopCertificate cert = loop_certificate(h, d);
    const u64 tail = d * static_cast<u64>(cert.frobenius + 1);
    const u64 ps_tau = std::max<u64>(1, tail / d);
    const u64 lps_tau = (cert.shortest_pair + tail) / d;
    a.ps_threshold = d * ps_tau;
    a.lps_threshold = d * lps_tau;

    const CountTable t = count_table(h, std::max(a.ps_threshold, a.lps_threshold));
    std::set<u64> ps_low, lps_low;
    for (u64 n = 1; n < a.ps_threshold; ++n) {
      if (t.p[n - 1] > 0)
        ps_low.insert(n);
    }
    for (u64 n = 1; n < a.lps_threshold; ++n) {
      if (t.q[n - 1] > 0)
        lps_low.insert(n);
    }
    a.ps = PeriodSetDescriptor(std::move(ps_low), {DescriptorComponent{d, ps_tau, {}}});
    a.lps = PeriodSetDescriptor(std::move(lps_low), {DescriptorComponent{d, lps_tau, {}}});
  } catch (...) {
    failures[k] = std::current_exception();
  }
  for (const auto& f : failures) {
    if (f)
      std::rethrow_exception(f);
  }
  return out;
}

PeriodSetDescriptor ps_descriptor(const DirectedMultigraph& g)
{
  PeriodSetDescriptor d;
  for (const auto& a : analyze_components(g))
    d = d.united(a.ps);
  return d;
}

PeriodSetDescriptor lps_descriptor_sft(const DirectedMultigraph& g)
{
  PeriodSetDescriptor d;
  for (const auto& a : analyze_components(g))
    d = d.united(a.lps);
  return d;
}

}  // namespace periodlab
