#include "periodlab/classification.hpp"

#include <algorithm>
#include <stdexcept>

namespace periodlab {

bool TableOneForm::starred() const
{
  return row == Transitivity::transitive && column != SystemClass::sft;
}

std::string TableOneForm::shape() const
{
  switch (row) {
    case Transitivity::mixing:
      return "{1} or S";
    case Transitivity::transitive:
      return column == SystemClass::sft ? "{d} or dS" : "F U d_i S_i (finite only if singleton)";
    case Transitivity::general:
      break;
  }
  return "F U d_i S_i";
}

namespace {

u64 members_gcd(const PeriodSetDescriptor& desc)
{
  u64 g = 0;
  for (u64 x : desc.finite())
    g = gcd_u64(g, x);
  for (const auto& c : desc.components())
    g = gcd_u64(g, c.d);
  return g;
}

}  // namespace

bool is_scaled_cofinite(const PeriodSetDescriptor& desc)
{
  if (desc.components().empty())
    return false;
  // Multiples of g are eventually all present only if some component has
  // scale exactly g: with every scale a proper multiple of g, large primes
  // times g are missed.
  const u64 g = members_gcd(desc);
  return std::any_of(desc.components().begin(), desc.components().end(),
                     [g](const DescriptorComponent& c) { return c.d == g; });
}

bool matches_table_form(const PeriodSetDescriptor& desc, TableOneForm cell)
{
  if (desc.empty())
    return false;
  const bool singleton = desc.is_finite() && desc.finite().size() == 1;
  switch (cell.row) {
    case Transitivity::mixing:
      if (desc.is_finite())
        return singleton && *desc.finite().begin() == 1;
      return std::any_of(desc.components().begin(), desc.components().end(),
                         [](const DescriptorComponent& c) { return c.d == 1; });
    case Transitivity::transitive:
      if (cell.column == SystemClass::sft)
        return singleton || is_scaled_cofinite(desc);
      return !desc.is_finite() || singleton;
    case Transitivity::general:
      return true;
  }
  return false;
}

namespace {

// Rank in the Sharkovskii order: odd parts >= 3 by (power, odd), then the
// powers of two in decreasing order.
std::pair<int, std::pair<u64, u64>> sharkovskii_key(u64 n)
{
  u64 a = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++a;
  }
  if (n > 1)
    return {0, {a, n}};
  return {1, {~a, 0}};
}

}  // namespace

bool sharkovskii_less(u64 m, u64 n)
{
  if (m == 0 || n == 0)
    throw std::invalid_argument("sharkovskii order is defined on positive integers");
  if (m == n)
    throw std::invalid_argument("sharkovskii_less needs distinct arguments");
  return sharkovskii_key(m) < sharkovskii_key(n);
}

bool SharkovskiiTail::contains(u64 m) const
{
  if (m == 0)
    return false;
  if (kind == Kind::powers_of_two)
    return (m & (m - 1)) == 0;
  return m == start || sharkovskii_less(start, m);
}

TailCheck is_sharkovskii_tail(const std::function<bool(u64)>& member, u64 horizon)
{
  std::vector<u64> order(horizon);
  for (u64 n = 1; n <= horizon; ++n)
    order[n - 1] = n;
  std::sort(order.begin(), order.end(),
            [](u64 a, u64 b) { return sharkovskii_key(a) < sharkovskii_key(b); });
  TailCheck out;
  bool seen = false;
  for (u64 n : order) {
    if (member(n)) {
      if (!seen)
        out.member = n;
      seen = true;
    } else if (seen) {
      out.is_tail = false;
      out.missing = n;
      return out;
    }
  }
  out.member = 0;
  return out;
}

TailCheck is_sharkovskii_tail(const SharkovskiiTail& tail, u64 horizon)
{
  return is_sharkovskii_tail([&](u64 m) { return tail.contains(m); }, horizon);
}

PerronBounds perron_bounds(const DirectedMultigraph& g, unsigned iterations)
{
  const std::size_t n = g.vertex_count();
  PerronBounds out;
  if (n == 0)
    return out;
  const auto a = g.adjacency_counts();
  // B = A + I has radius rho(A) + 1 and keeps every iterate positive.
  auto apply = [&](const std::vector<BigInt>& x) {
    std::vector<BigInt> y(x);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (a[i][j])
          y[i] += x[j] * a[i][j];
    return y;
  };
  std::vector<BigInt> x(n, BigInt(1));
  for (unsigned k = 0;; ++k) {
    const std::vector<BigInt> y = apply(x);
    Rational lo(y[0], x[0]), hi = lo;
    for (std::size_t i = 1; i < n; ++i) {
      const Rational q(y[i], x[i]);
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    out.lower = lo - 1;
    out.upper = hi - 1;
    if (lo == hi || k >= iterations)
      break;
    // Strip the common factor so the entries stay moderate.
    BigInt c = 0;
    for (const auto& v : y)
      c = boost::multiprecision::gcd(c, v);
    x = y;
    for (auto& v : x)
      v /= c;
  }
  if (out.lower < 0)
    out.lower = 0;
  return out;
}

std::string to_string(KriegerVerdict::Kind kind)
{
  switch (kind) {
    case KriegerVerdict::Kind::entropy_fail:
      return "entropy_fail";
    case KriegerVerdict::Kind::period_fail:
      return "period_fail";
    case KriegerVerdict::Kind::pass_at_desk_scale:
      break;
  }
  return "pass_at_desk_scale";
}

KriegerVerdict krieger_check(const DirectedMultigraph& x, const DirectedMultigraph& y,
                             u64 horizon)
{
  KriegerVerdict v;
  v.horizon = horizon;
  v.x_bounds = perron_bounds(x);
  v.y_bounds = perron_bounds(y);

  // h = log max(rho, 1).
  const Rational one = 1;
  const Rational hx_hi = std::max(v.x_bounds.upper, one);
  const Rational hx_lo = std::max(v.x_bounds.lower, one);
  if (!(hx_hi < v.y_bounds.lower)) {
    v.kind = KriegerVerdict::Kind::entropy_fail;
    v.entropy_certified = hx_lo >= v.y_bounds.upper;
    return v;
  }

  // Unequal entropies settle nothing for a non-mixing target.
  if (!is_mixing(y))
    throw ShapeError("embedding target must be a mixing shift of finite type");

  const CountTable cx = count_table(x, horizon);
  const CountTable cy = count_table(y, horizon);
  for (u64 n = 1; n <= horizon; ++n) {
    if (cx.q[n - 1] > cy.q[n - 1]) {
      v.kind = KriegerVerdict::Kind::period_fail;
      v.witness = n;
      v.witness_qx = cx.q[n - 1];
      v.witness_qy = cy.q[n - 1];
      return v;
    }
  }
  v.kind = KriegerVerdict::Kind::pass_at_desk_scale;
  const PeriodSetDescriptor lx = lps_descriptor_sft(x);
  v.all_n = lx.is_finite() && (lx.finite().empty() || *lx.finite().rbegin() <= horizon);
  return v;
}

}  // namespace periodlab
