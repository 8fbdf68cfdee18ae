#include "periodlab/gapshift.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "periodlab/classification.hpp"

namespace periodlab {

GapSet::GapSet(std::set<u64> finite, std::vector<Progression> progressions)
{
  for (const auto& p : progressions) {
    if (p.r == 0)
      throw std::invalid_argument("progression difference must be positive");
  }
  auto raw = [&](u64 n) {
    if (finite.count(n))
      return true;
    return std::any_of(progressions.begin(), progressions.end(),
                       [n](const Progression& p) { return n >= p.a && (n - p.a) % p.r == 0; });
  };

  if (progressions.empty()) {
    finite_ = std::move(finite);
    preperiod_ = finite_.empty() ? 0 : *finite_.rbegin() + 1;
    period_ = 1;
    return;
  }

  u64 t = finite.empty() ? 0 : *finite.rbegin() + 1;
  u64 big_period = 1;
  for (const auto& p : progressions) {
    t = std::max(t, p.a);
    big_period = lcm_u64(big_period, p.r);
  }
  // Smallest period of the eventual pattern, then the earliest start.
  u64 period = big_period;
  for (u64 p : divisors(big_period)) {
    bool ok = true;
    for (u64 i = 0; i < big_period && ok; ++i)
      ok = raw(t + i) == raw(t + (i + p) % big_period);
    if (ok) {
      period = p;
      break;
    }
  }
  while (t > 0 && raw(t - 1) == raw(t - 1 + period))
    --t;

  for (u64 x = t; x < t + period; ++x) {
    if (!raw(x))
      continue;
    u64 start = x;
    while (start >= period && raw(start - period))
      start -= period;
    progressions_.push_back({start, period});
  }
  std::sort(progressions_.begin(), progressions_.end());
  preperiod_ = t;
  period_ = period;
  for (u64 n = 0; n < t; ++n) {
    if (raw(n) && !contains(n))
      finite_.insert(n);
  }
}

bool GapSet::contains(u64 n) const
{
  if (finite_.count(n))
    return true;
  return std::any_of(progressions_.begin(), progressions_.end(),
                     [n](const Progression& p) { return n >= p.a && (n - p.a) % p.r == 0; });
}

bool GapSet::is_cofinite() const
{
  return !progressions_.empty() && period_ == 1;
}

std::vector<u64> GapSet::members_upto(u64 limit) const
{
  std::vector<u64> out;
  for (u64 n = 0; n <= limit; ++n) {
    if (contains(n))
      out.push_back(n);
  }
  return out;
}

u64 GapSet::gcd() const
{
  u64 g = 0;
  for (u64 x : finite_)
    g = gcd_u64(g, x);
  for (const auto& p : progressions_)
    g = gcd_u64(g, gcd_u64(p.a, p.r));
  return g;
}

GapSet GapSet::shifted_up(u64 k) const
{
  std::set<u64> f;
  for (u64 x : finite_)
    f.insert(x + k);
  std::vector<Progression> ps;
  for (const auto& p : progressions_)
    ps.push_back({p.a + k, p.r});
  return GapSet(std::move(f), std::move(ps));
}

GapClass classify_gap(const GapSet& s)
{
  return s.is_finite() || s.is_cofinite() ? GapClass::sft : GapClass::sofic_not_sft;
}

AlmostSumClosure almost_sum_closure(const GapSet& s, u64 horizon)
{
  if (s.empty())
    throw std::invalid_argument("almost_sum_closure needs a nonempty set");
  if (s.contains(0))
    throw std::invalid_argument("almost_sum_closure works on positive integers");

  AlmostSumClosure out;
  if (s.is_finite() && s.finite().size() == 1) {
    const u64 x = *s.finite().begin();
    if (x <= horizon)
      out.members.insert(x);
    out.descriptor = PeriodSetDescriptor::singleton(x);
    return out;
  }

  // Certified threshold: with a < b the two smallest generators and F the
  // Frobenius number of a gcd-g generating subset scaled down by g, every
  // multiple of g beyond g(F+1) + a + b is a + b + (semigroup element).
  const u64 g = s.gcd();
  std::vector<u64> basis;
  u64 bg = 0;
  for (u64 x : s.members_upto(s.preperiod() + 2 * s.period() + 1)) {
    basis.push_back(x);
    bg = gcd_u64(bg, x);
    if (bg == g && basis.size() >= 2)
      break;
  }
  std::vector<u64> scaled;
  for (u64 x : basis)
    scaled.push_back(x / g);
  const std::int64_t frob = NumericalSemigroup(scaled).frobenius();
  out.threshold = g * static_cast<u64>(frob + 1) + basis[0] + basis[1];

  const u64 limit = std::max(horizon, out.threshold);
  std::vector<u64> gens;
  for (u64 x : s.members_upto(limit))
    gens.push_back(x);
  // divides[m]: generators dividing m, i.e. single-value sums equal to m.
  std::vector<std::size_t> divides(limit + 1, 0);
  for (u64 b : gens)
    for (u64 m = b; m <= limit; m += b)
      ++divides[m];
  // two[n]: n is a sum using at least two distinct values.
  std::vector<bool> two(limit + 1, false);
  for (u64 n = 1; n <= limit; ++n) {
    for (u64 a : gens) {
      if (a >= n)
        break;
      const u64 m = n - a;
      if (two[m] || divides[m] > (m % a == 0 ? 1u : 0u)) {
        two[n] = true;
        break;
      }
    }
  }

  std::set<u64> below;
  for (u64 n = 1; n <= limit; ++n) {
    const bool in = two[n] || s.contains(n);
    if (in && n <= horizon)
      out.members.insert(n);
    if (in && n < out.threshold)
      below.insert(n);
  }
  out.descriptor = PeriodSetDescriptor(std::move(below), {{g, out.threshold / g, {}}});
  return out;
}

AlmostSumClosure almost_sum_closure(const std::set<u64>& s, u64 horizon)
{
  return almost_sum_closure(GapSet(s, {}), horizon);
}

PeriodSetDescriptor gap_lps(const GapSet& s)
{
  if (s.empty())
    throw std::invalid_argument("gap_lps needs a nonempty gap set");
  PeriodSetDescriptor lps = almost_sum_closure(s.shifted_up(1), 0).descriptor;
  // 0^inf is a fixed point exactly when arbitrarily long gaps are allowed.
  if (!s.is_finite())
    lps = lps.united(PeriodSetDescriptor::singleton(1));
  return lps;
}

namespace {

using Pair = std::pair<u64, u64>;

// First pair x < y of members with x + y missing, among members <= bound.
std::optional<Pair> closure_witness(const PeriodSetDescriptor& q, u64 bound)
{
  const std::vector<u64> m = q.members_upto(bound);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!q.contains(m[i] + m[j]))
        return Pair{m[i], m[j]};
  return std::nullopt;
}

// For q = d R with R cofinite: the start of the tail of multiples of d.
// Members below it are all that an almost sum-closure check has to pair up.
std::optional<u64> scaled_tail_start(const PeriodSetDescriptor& q)
{
  if (!is_scaled_cofinite(q))
    return std::nullopt;
  u64 g = 0;
  for (u64 x : q.finite())
    g = gcd_u64(g, x);
  for (const auto& c : q.components())
    g = gcd_u64(g, c.d);
  for (const auto& c : q.components())
    if (c.d == g)
      return c.d * c.threshold;
  return std::nullopt;
}

bool closed_scaled_cofinite(const PeriodSetDescriptor& q, u64& d, u64& tail)
{
  const auto t = scaled_tail_start(q);
  if (!t)
    return false;
  tail = *t;
  d = 0;
  for (u64 x : q.members_upto(tail))
    d = gcd_u64(d, x);
  for (const auto& c : q.components())
    d = gcd_u64(d, c.d);
  // Sums reaching the tail are multiples of d and so already present.
  return !closure_witness(q, tail > 0 ? tail - 1 : 0);
}

}  // namespace

GapSet gap_realize(const PeriodSetDescriptor& q)
{
  if (q.empty())
    throw GapShapeError("empty set is not a least period set of a gap shift", 0, 0);
  if (q.is_finite() && q.finite().size() == 1)
    return GapSet({*q.finite().begin() - 1}, {});

  u64 d = 0, tail = 0;
  if (closed_scaled_cofinite(q, d, tail)) {
    // (F U B) - 1 with B = {dN, ..., 2dN}.
    std::set<u64> s;
    for (u64 x : q.members_upto(tail - 1))
      s.insert(x - 1);
    for (u64 x = tail; x <= 2 * tail; x += d)
      s.insert(x - 1);
    return GapSet(std::move(s), {});
  }

  if (q.contains(1)) {
    std::set<u64> f = q.finite();
    f.erase(1);
    const PeriodSetDescriptor rest(std::move(f), q.components());
    if (!rest.is_finite() && closed_scaled_cofinite(rest, d, tail)) {
      std::set<u64> s;
      for (u64 x : rest.members_upto(tail - 1))
        s.insert(x - 1);
      return GapSet(std::move(s), {{tail - 1, d}});
    }
  }

  const u64 bound = q.stable_bound() + 2 * q.period_bound() + 1;
  auto w = closure_witness(q, bound);
  if (!w && q.contains(1)) {
    std::set<u64> f = q.finite();
    f.erase(1);
    w = closure_witness(PeriodSetDescriptor(std::move(f), q.components()), bound);
  }
  const Pair p = w.value_or(Pair{0, 0});
  std::string msg = "not a gap-shift least period set: " + q.to_string();
  if (w)
    msg += " (" + std::to_string(p.first) + " + " + std::to_string(p.second) + " missing)";
  throw GapShapeError(msg, p.first, p.second);
}

LabeledGraph gap_to_labeled_graph(const GapSet& s)
{
  if (s.empty())
    throw std::invalid_argument("gap_to_labeled_graph needs a nonempty gap set");
  // Vertex c_k: k zeros read since the last 1.
  const u64 length = s.is_finite() ? *s.finite().rbegin() + 1 : s.preperiod() + s.period();
  const std::size_t width = std::to_string(length).size();
  auto pad = [width](char tag, u64 k) {
    std::string digits = std::to_string(k);
    return std::string(1, tag) + std::string(width - digits.size(), '0') + digits;
  };

  std::vector<std::string> ids;
  for (u64 k = 0; k < length; ++k)
    ids.push_back(pad('c', k));
  std::vector<EdgeSpec> edges;
  std::vector<char> labels;
  for (u64 k = 0; k + 1 < length; ++k) {
    edges.push_back({pad('z', k), ids[k], ids[k + 1]});
    labels.push_back('0');
  }
  if (!s.is_finite()) {
    edges.push_back({pad('z', length - 1), ids[length - 1], ids[s.preperiod()]});
    labels.push_back('0');
  }
  for (u64 k = 0; k < length; ++k) {
    if (s.contains(k)) {
      edges.push_back({pad('o', k), ids[k], ids[0]});
      labels.push_back('1');
    }
  }
  return LabeledGraph(DirectedMultigraph(ids, edges), std::move(labels));
}

}  // namespace periodlab
