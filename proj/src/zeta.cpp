#include "periodlab/zeta.hpp"

#include <algorithm>
#include <stdexcept>

namespace periodlab {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> coeffs)
{
  for (long long v : coeffs)
    c_.emplace_back(v);
  trim();
}

void IntPolynomial::trim()
{
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const
{
  std::vector<BigInt> d;
  for (std::size_t k = 1; k < c_.size(); ++k)
    d.push_back(c_[k] * k);
  return IntPolynomial(std::move(d));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
{
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a[k] + b[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
{
  std::vector<BigInt> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = a[k] - b[k];
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<BigInt> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b)
{
  if (b.is_zero() || (b[0] != 1 && b[0] != -1))
    throw std::invalid_argument("exact_divide: divisor needs constant term +-1");
  if (a.is_zero())
    return {};
  if (a.degree() < b.degree())
    throw std::invalid_argument("exact_divide: division is not exact");
  // Power-series division from the constant term up.
  const std::size_t qlen = static_cast<std::size_t>(a.degree() - b.degree()) + 1;
  std::vector<BigInt> q(qlen);
  for (std::size_t k = 0; k < qlen; ++k) {
    BigInt acc = a[k];
    for (std::size_t j = 1; j <= k && j <= static_cast<std::size_t>(b.degree()); ++j)
      acc -= b[j] * q[k - j];
    q[k] = b[0] == 1 ? acc : BigInt(-acc);
  }
  IntPolynomial result(std::move(q));
  if (result * b != a)
    throw std::invalid_argument("exact_divide: division is not exact");
  return result;
}

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p)
{
  while (!p.empty() && p.back() == 0)
    p.pop_back();
}

RatPoly to_rat(const IntPolynomial& p)
{
  return RatPoly(p.coeffs().begin(), p.coeffs().end());
}

// a = q*b + r over Q.
void divmod(RatPoly a, const RatPoly& b, RatPoly& q, RatPoly& r)
{
  trim(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rational f = a.back() / b.back();
    q[shift] = f;
    for (std::size_t k = 0; k < b.size(); ++k)
      a[shift + k] -= f * b[k];
    a.pop_back();
    trim(a);
  }
  r = std::move(a);
}

RatPoly monic_gcd(RatPoly a, RatPoly b)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a)
      c /= lead;
  }
  return a;
}

}  // namespace

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
{
  if (den.is_zero() || den[0] == 0)
    throw std::invalid_argument("rational function denominator must not vanish at 0");
  if (num.is_zero()) {
    den_ = IntPolynomial{1};
    return;
  }
  RatPoly n = to_rat(num), d = to_rat(den);
  const RatPoly g = monic_gcd(n, d);
  if (g.size() > 1) {
    RatPoly q, r;
    divmod(n, g, q, r);
    n = std::move(q);
    divmod(d, g, q, r);
    d = std::move(q);
  }
  BigInt scale = 1;
  for (const auto* p : {&n, &d})
    for (const Rational& c : *p)
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
  std::vector<BigInt> ni, di;
  BigInt content = 0;
  for (const Rational& c : n) {
    ni.push_back(boost::multiprecision::numerator(Rational(c * scale)));
    content = boost::multiprecision::gcd(content, ni.back());
  }
  for (const Rational& c : d) {
    di.push_back(boost::multiprecision::numerator(Rational(c * scale)));
    content = boost::multiprecision::gcd(content, di.back());
  }
  if (di.front() < 0)
    content = -content;
  for (auto& c : ni)
    c /= content;
  for (auto& c : di)
    c /= content;
  num_ = IntPolynomial(std::move(ni));
  den_ = IntPolynomial(std::move(di));
}

std::vector<Rational> RationalFunction::series(std::size_t count) const
{
  std::vector<Rational> c(count);
  const Rational d0 = den_[0];
  for (std::size_t k = 0; k < count; ++k) {
    Rational acc = num_[k];
    for (std::size_t j = 1; j <= k && static_cast<long>(j) <= den_.degree(); ++j)
      acc -= Rational(den_[j]) * c[k - j];
    c[k] = acc / d0;
  }
  return c;
}

IntPolynomial det_one_minus_tA(const DirectedMultigraph& g)
{
  const std::size_t n = g.vertex_count();
  if (n == 0)
    return IntPolynomial{1};
  const auto a = g.adjacency_counts();
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<BigInt> c{BigInt(i == j ? 1 : 0), BigInt(0) - BigInt(a[i][j])};
      m[i][j] = IntPolynomial(std::move(c));
    }
  }
  // Bareiss. Every pivot is a leading principal minor of I - tA and so has
  // constant term 1, which also makes every division exact from the low end.
  IntPolynomial prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const IntPolynomial& pivot = m[k][k];
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(pivot * m[i][j] - m[i][k] * m[k][j], prev);
    }
    prev = pivot;
  }
  return m[n - 1][n - 1];
}

RationalFunction zeta_of_graph(const DirectedMultigraph& g)
{
  return RationalFunction(IntPolynomial{1}, det_one_minus_tA(g));
}

RationalFunction log_derivative(const RationalFunction& z)
{
  const IntPolynomial& n = z.num();
  const IntPolynomial& d = z.den();
  if (n.is_zero() || n[0] == 0)
    throw std::invalid_argument("log_derivative: z(0) must be nonzero");
  return RationalFunction(n.derivative() * d - n * d.derivative(), n * d);
}

std::vector<Rational> log_derivative_series(const RationalFunction& z, std::size_t count)
{
  if (z.num()[0] != z.den()[0])
    throw std::invalid_argument("log_derivative_series: z(0) must be 1");
  return log_derivative(z).series(count);
}

std::vector<Rational> LinearRecurrence::coefficients(std::size_t count) const
{
  std::vector<Rational> a(initial.begin(),
                          initial.begin() + static_cast<long>(std::min(count, initial.size())));
  while (a.size() < count) {
    const std::size_t k = a.size();
    Rational acc = 0;
    for (std::size_t i = 1; i <= b.size() && i <= k; ++i)
      acc -= b[i - 1] * a[k - i];
    a.push_back(acc);
  }
  return a;
}

std::vector<Rational> LinearRecurrence::terms(u64 first, std::size_t count) const
{
  const u64 last = first + count;  // exclusive
  const std::vector<Rational> a = coefficients(last > offset ? last - offset : 0);
  std::vector<Rational> out;
  for (u64 n = first; n < last; ++n)
    out.push_back(n >= offset ? a[n - offset] : Rational(0));
  return out;
}

LinearRecurrence recurrence_from_rational(const RationalFunction& f, u64 offset)
{
  LinearRecurrence rec;
  rec.offset = offset;
  const IntPolynomial& d = f.den();
  const Rational d0 = d[0];
  for (long i = 1; i <= d.degree(); ++i)
    rec.b.push_back(Rational(d[i]) / d0);
  const std::size_t s =
      std::max<std::size_t>(rec.b.size(), static_cast<std::size_t>(f.num().degree() + 1));
  rec.initial = f.series(s);
  return rec;
}

std::optional<EmpiricalSupport> empirical_zero_set(const LinearRecurrence& rec, u64 horizon)
{
  if (horizon < 4 * std::max<u64>(rec.order(), 1))
    throw std::invalid_argument("empirical_zero_set: horizon must be at least 4 * order");
  const std::vector<Rational> a = rec.terms(1, horizon);
  std::vector<bool> s(horizon + 1, false);
  for (u64 n = 1; n <= horizon; ++n)
    s[n] = a[n - 1] != 0;

  for (u64 r = 1; r <= horizon / 4; ++r) {
    u64 pre = 1;
    for (u64 n = 1; n + r <= horizon; ++n) {
      if (s[n] != s[n + r])
        pre = n + 1;
    }
    if (pre > horizon / 2)
      continue;

    EmpiricalSupport fit;
    fit.horizon = horizon;
    fit.period = r;
    fit.preperiod = pre;
    for (u64 n = 1; n < pre; ++n) {
      if (s[n])
        fit.head.insert(n);
    }
    fit.residues.assign(r, false);
    for (u64 n = pre; n < pre + r; ++n)
      fit.residues[n % r] = s[n];

    // Closed iff each residue brings along every multiple of gcd(residue, r).
    std::set<u64> scales;
    bool closed = true;
    for (u64 rho = 0; rho < r && closed; ++rho) {
      if (!fit.residues[rho])
        continue;
      const u64 g = gcd_u64(rho, r);
      scales.insert(g);
      for (u64 x = 0; x < r && closed; x += g)
        closed = fit.residues[x];
    }
    if (closed) {
      std::vector<DescriptorComponent> comps;
      for (u64 g : scales)
        comps.push_back({g, (pre + g - 1) / g, {}});
      fit.descriptor = PeriodSetDescriptor(fit.head, std::move(comps), false);
    }
    return fit;
  }
  return std::nullopt;
}

}  // namespace periodlab
