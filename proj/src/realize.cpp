#include "periodlab/realize.hpp"

#include <algorithm>
#include <stdexcept>

#include "periodlab/classification.hpp"
#include "periodlab/gapshift.hpp"

namespace periodlab {

std::string to_string(RealizeTarget t)
{
  switch (t) {
    case RealizeTarget::irreducible_sft:
      return "irreducible_sft";
    case RealizeTarget::reducible_sft:
      return "reducible_sft";
    case RealizeTarget::irreducible_sofic:
      return "irreducible_sofic";
    case RealizeTarget::arbitrary_subshift:
      return "arbitrary_subshift";
    case RealizeTarget::period_set_variant:
      break;
  }
  return "period_set_variant";
}

std::optional<RealizeTarget> parse_realize_target(const std::string& name)
{
  for (auto t : {RealizeTarget::irreducible_sft, RealizeTarget::reducible_sft,
                 RealizeTarget::irreducible_sofic, RealizeTarget::arbitrary_subshift,
                 RealizeTarget::period_set_variant}) {
    if (to_string(t) == name)
      return t;
  }
  return std::nullopt;
}

namespace {

struct CycleGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  // Cycle of the given length through v; returns its vertices from v on.
  std::vector<std::size_t> attach(std::size_t v, u64 length)
  {
    std::vector<std::size_t> cyc{v};
    for (u64 k = 1; k < length; ++k)
      cyc.push_back(n++);
    for (std::size_t k = 0; k < cyc.size(); ++k)
      edges.emplace_back(cyc[k], cyc[(k + 1) % cyc.size()]);
    return cyc;
  }

  std::vector<std::size_t> cycle(u64 length)
  {
    const std::size_t v = n++;
    return attach(v, length);
  }

  DirectedMultigraph build() const { return DirectedMultigraph::from_edges(n, edges); }
};

u64 members_gcd(const PeriodSetDescriptor& desc)
{
  u64 g = 0;
  for (u64 x : desc.finite())
    g = gcd_u64(g, x);
  for (const auto& c : desc.components())
    g = gcd_u64(g, c.d);
  return g;
}

// Mixing graph whose least periods are F U {n >= N}.
DirectedMultigraph mixing_cofinite(std::set<u64> f, u64 big)
{
  // An N-cycle and an (N+1)-cycle alone miss N+2 once N > 2; read
  // {n >= N} as {N} U {n >= N+1} instead.
  if (f.empty())
    f.insert(big++);
  CycleGraph g;
  const auto main = g.cycle(big);
  std::vector<std::size_t> first;
  std::size_t slot = 0;
  for (u64 x : f) {
    auto c = g.attach(main[slot++], x);
    if (first.empty())
      first = std::move(c);
  }
  const u64 f1 = *f.begin();
  for (u64 i = 1; i < f1; ++i)
    g.attach(first[i], big + i);
  return g.build();
}

}  // namespace

DirectedMultigraph realize_irreducible_sft(const PeriodSetDescriptor& desc)
{
  if (desc.is_finite() && desc.finite().size() == 1) {
    CycleGraph g;
    g.cycle(*desc.finite().begin());
    return g.build();
  }
  if (!is_scaled_cofinite(desc))
    throw ShapeError("irreducible SFT least period sets are {d} or dS with S cofinite; got " +
                     desc.to_string() + " (try reducible_sft)");
  const u64 d = members_gcd(desc);
  u64 big = 0;
  for (const auto& c : desc.components())
    if (c.d == d)
      big = c.threshold;
  std::set<u64> f;
  for (u64 x : desc.members_upto(d * big - 1))
    f.insert(x / d);
  return mixing_cofinite(f, big).subdivide(d);
}

DirectedMultigraph realize_reducible_sft(const PeriodSetDescriptor& desc)
{
  if (desc.empty())
    throw ShapeError("an SFT least period set must be nonempty");
  std::vector<DirectedMultigraph> parts;
  for (u64 x : desc.finite())
    parts.push_back(realize_irreducible_sft(PeriodSetDescriptor::singleton(x)));
  for (const auto& c : desc.components())
    parts.push_back(realize_irreducible_sft(PeriodSetDescriptor::tail(c.d, c.threshold)));
  if (parts.size() == 1)
    return parts.front();
  return DirectedMultigraph::disjoint_union(parts);
}

namespace {

class LabeledBuilder {
 public:
  std::size_t vertex(std::string id)
  {
    ids_.push_back(std::move(id));
    return ids_.size() - 1;
  }

  // Path from `from` to `to` spelling w, through fresh vertices tagged by
  // `tag`.
  void path(std::size_t from, std::size_t to, const std::string& w, const std::string& tag)
  {
    std::size_t prev = from;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const std::size_t next = k + 1 == w.size() ? to : vertex(tag + "." + std::to_string(k + 1));
      specs_.push_back({"e" + std::to_string(specs_.size()), ids_[prev], ids_[next]});
      labels_.push_back(w[k]);
      prev = next;
    }
  }

  LabeledGraph build() const { return LabeledGraph(DirectedMultigraph(ids_, specs_), labels_); }

 private:
  std::vector<std::string> ids_;
  std::vector<EdgeSpec> specs_;
  std::vector<char> labels_;
};

std::string power(const std::string& w, u64 times)
{
  std::string out;
  for (u64 k = 0; k < times; ++k)
    out += w;
  return out;
}

std::string orbit_word(u64 d)
{
  return "1" + std::string(d - 1, '0');
}

}  // namespace

SoficRealization realize_sofic_detailed(const PeriodSetDescriptor& desc)
{
  if (desc.empty())
    throw ShapeError("a least period set must be nonempty");
  SoficRealization out;
  if (desc.is_finite()) {
    if (desc.finite().size() != 1)
      throw ShapeError("a finite least period set of an irreducible sofic shift is a singleton; got " +
                       desc.to_string());
    const u64 d = *desc.finite().begin();
    LabeledBuilder b;
    const std::size_t root = b.vertex("r");
    b.path(root, root, orbit_word(d), "w");
    out.graph = b.build();
    out.d_star = d;
    out.k_star = 0;
    return out;
  }

  // d_i (N + k_i), raised until d_i (k_i + 1) > 2i; skipped values join F.
  std::set<u64> f = desc.finite();
  const std::size_t n = desc.components().size();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& c = desc.components()[i - 1];
    TorusSection t;
    t.d = c.d;
    t.k = c.threshold - 1;
    while (t.d * (t.k + 1) <= 2 * i) {
      f.insert(t.d * (t.k + 1));
      ++t.k;
    }
    out.tori.push_back(t);
  }

  out.d_star = 1;
  for (const auto& t : out.tori)
    out.d_star = lcm_u64(out.d_star, t.d);
  out.k_star = 1;
  for (const auto& t : out.tori)
    while (out.d_star * (out.k_star + 1) < t.d * (t.k + 1))
      ++out.k_star;
  const u64 ds = out.d_star, ks = out.k_star;
  auto in_core = [ds, ks](u64 x) { return x % ds == 0 && x / ds >= ks + 1; };

  u64 bound = f.empty() ? 1 : *f.rbegin() + 1;
  std::vector<AlmostSumClosure> closures;
  for (std::size_t i = 1; i <= n; ++i) {
    TorusSection& t = out.tori[i - 1];
    const u64 lu = t.d * (t.k + 1), lv = t.d * (t.k + 2);
    t.u = std::string(2 * i, '1') + std::string(lu - 2 * i, '0');
    t.v = std::string(2 * i + 1, '1') + std::string(lv - 2 * i - 1, '0');
    t.t = 2;
    while (!in_core(t.t * lu) || !in_core(t.t * lv))
      ++t.t;
    // Least periods of the section: |u| and |v| alone, or any sum using both.
    closures.push_back(almost_sum_closure(std::set<u64>{lu, lv}, 0));
    bound = std::max(bound, closures.back().threshold);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (u64 x : closures[i].descriptor.members_upto(bound))
      out.tori[i].periods_below.insert(x);

  auto requested = [&](u64 x) {
    if (f.count(x))
      return true;
    return std::any_of(out.tori.begin(), out.tori.end(), [x](const TorusSection& t) {
      return x % t.d == 0 && x / t.d >= t.k + 1;
    });
  };
  // Past `bound` every torus produces all of its own progression.
  for (u64 x = 1; x < bound; ++x) {
    if (!requested(x))
      continue;
    const bool made = std::any_of(closures.begin(), closures.end(),
                                  [x](const AlmostSumClosure& c) { return c.descriptor.contains(x); });
    if (!made)
      out.missed.insert(x);
  }

  LabeledBuilder b;
  const std::size_t root = b.vertex("r");
  for (std::size_t i = 1; i <= n; ++i) {
    const TorusSection& t = out.tori[i - 1];
    const std::string tag = "t" + std::to_string(i);
    std::vector<std::vector<std::size_t>> grid(t.t, std::vector<std::size_t>(t.t));
    for (u64 a = 0; a < t.t; ++a)
      for (u64 c = 0; c < t.t; ++c)
        grid[a][c] = a == 0 && c == 0
                         ? root
                         : b.vertex(tag + "_" + std::to_string(a) + "_" + std::to_string(c));
    for (u64 a = 0; a < t.t; ++a) {
      for (u64 c = 0; c < t.t; ++c) {
        const std::string at = tag + "_" + std::to_string(a) + "_" + std::to_string(c);
        b.path(grid[a][c], grid[a][(c + 1) % t.t], t.u, at + "u");
        b.path(grid[a][c], grid[(a + 1) % t.t][c], t.v, at + "v");
      }
    }
  }
  for (u64 j : out.missed) {
    u64 c = 2;
    if (j == 1) {
      c = 2 * n + 2;
      while (!in_core(c))
        ++c;
    } else {
      while (!in_core(c * j))
        ++c;
    }
    out.cycles.emplace_back(j, c);
    b.path(root, root, power(orbit_word(j), c), "j" + std::to_string(j));
  }
  out.graph = b.build();
  return out;
}

LabeledGraph realize_sofic(const PeriodSetDescriptor& desc)
{
  return realize_sofic_detailed(desc).graph;
}

ArbitrarySubshift::ArbitrarySubshift(std::vector<u64> finite_set)
{
  std::sort(finite_set.begin(), finite_set.end());
  finite_set.erase(std::unique(finite_set.begin(), finite_set.end()), finite_set.end());
  if (finite_set.empty())
    throw std::invalid_argument("least period set must be nonempty");
  if (finite_set.front() == 0)
    throw std::invalid_argument("least periods are positive");
  first_ = finite_set.front();
  limit_ = finite_set.back();
  std::set<u64> s(finite_set.begin(), finite_set.end());
  member_ = [s](u64 n) { return s.count(n) > 0; };
}

ArbitrarySubshift::ArbitrarySubshift(std::function<bool(u64)> member)
    : member_(std::move(member)), infinite_(true)
{
  constexpr u64 search = 1'000'000;
  for (u64 n = 1; n <= search && first_ == 0; ++n)
    if (member_(n))
      first_ = n;
  if (first_ == 0)
    throw std::invalid_argument("least period set has no element below 10^6");
}

std::string ArbitrarySubshift::generator(u64 k) const
{
  if (!infinite_ || member_(1) || k == first_)
    return orbit_word(k);
  // 1 u_1^g u' with u' a strict prefix of u_1; 110 only at the start.
  const std::string u1 = orbit_word(first_);
  const u64 rest = k - 1;
  return "1" + power(u1, rest / first_) + u1.substr(0, rest % first_);
}

std::vector<std::string> ArbitrarySubshift::generators_upto(u64 length) const
{
  std::vector<std::string> out;
  const u64 last = infinite_ ? length : std::min(length, limit_);
  for (u64 k = 1; k <= last; ++k)
    if (member_(k))
      out.push_back(generator(k));
  return out;
}

std::vector<std::string> ArbitrarySubshift::first_generators(std::size_t count) const
{
  std::vector<std::string> out;
  for (u64 k = 1; out.size() < count && (infinite_ || k <= limit_); ++k)
    if (member_(k))
      out.push_back(generator(k));
  return out;
}

std::vector<std::string> ArbitrarySubshift::periodic_points_upto(u64 horizon) const
{
  std::vector<std::string> out = generators_upto(horizon);
  // Long runs of zeros in the generators accumulate on 0^inf.
  if (infinite_ && member_(1) && horizon >= 1)
    out.push_back("0");
  return out;
}

std::set<u64> ArbitrarySubshift::least_periods_upto(u64 horizon) const
{
  std::set<u64> out;
  for (const auto& w : periodic_points_upto(horizon))
    out.insert(least_rotation_period(w));
  return out;
}

bool ArbitrarySubshift::occurs(const std::string& w, u64 horizon) const
{
  if (w.empty())
    return true;
  for (const auto& u : generators_upto(std::max<u64>(horizon, w.size() + 1))) {
    const std::string s = power(u, w.size() / u.size() + 2);
    if (s.find(w) != std::string::npos)
      return true;
  }
  // Windows of (10^(k-1))^inf for k beyond |w|: at most one 1.
  if (infinite_ && member_(1))
    return std::count(w.begin(), w.end(), '1') <= 1;
  return false;
}

ArbitrarySubshift realize_arbitrary(std::vector<u64> finite_set)
{
  return ArbitrarySubshift(std::move(finite_set));
}

ArbitrarySubshift realize_arbitrary(std::function<bool(u64)> member)
{
  return ArbitrarySubshift(std::move(member));
}

bool is_multiplicatively_closed(const PeriodSetDescriptor& desc)
{
  // Component members are closed on their own; a finite member f needs a
  // component whose scale divides f, and the multiples of f below that
  // component's start checked one by one.
  for (u64 f : desc.finite()) {
    const auto& comps = desc.components();
    auto it = std::find_if(comps.begin(), comps.end(),
                           [f](const DescriptorComponent& c) { return f % c.d == 0; });
    if (it == comps.end())
      return false;
    u64 reach = 0;
    for (const auto& c : comps)
      if (f % c.d == 0)
        reach = std::max(reach, c.d * c.threshold);
    for (u64 m = 2 * f; m < reach + f; m += f)
      if (!desc.contains(m))
        return false;
  }
  return true;
}

LabeledGraph realize_period_set(const PeriodSetDescriptor& desc)
{
  if (desc.empty() || !is_multiplicatively_closed(desc))
    throw ShapeError("a period set contains every multiple of its members; got " +
                     desc.to_string());
  return realize_sofic(desc);
}

}  // namespace periodlab
