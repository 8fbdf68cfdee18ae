#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "periodlab/zeta.hpp"

using namespace periodlab;

namespace {

// exp(sum p_n t^n / n) up to t^deg
std::vector<Rational> exp_series(const std::vector<BigInt>& p, std::size_t deg)
{
  std::vector<Rational> e(deg + 1, 0);
  e[0] = 1;
  for (std::size_t n = 1; n <= deg; ++n) {
    Rational s = 0;
    for (std::size_t k = 1; k <= n; ++k) s += Rational(p[k - 1]) * e[n - k];
    e[n] = s / n;
  }
  return e;
}

DirectedMultigraph from_bits(std::size_t n, unsigned bits)
{
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n * n; ++i)
    if (bits >> i & 1) e.emplace_back(i / n, i % n);
  return DirectedMultigraph::from_edges(n, e);
}

}  // namespace

TEST_CASE("polynomial arithmetic")
{
  IntPolynomial a{1, -1}, b{1, 1};
  CHECK(a * b == IntPolynomial{1, 0, -1});
  CHECK(exact_divide(a * b, b) == a);
  CHECK((a - a).is_zero());
  CHECK(IntPolynomial{0, 0}.degree() == -1);
  CHECK(IntPolynomial{3, 2, 1}.derivative() == IntPolynomial{2, 2});
}

TEST_CASE("golden mean zeta")
{
  auto z = zeta_of_graph(oracle::golden_mean());
  CHECK(z.num() == IntPolynomial{1});
  CHECK(z.den() == IntPolynomial{1, -1, -1});
  auto p = log_derivative_series(z, 5);
  CHECK(p == std::vector<Rational>{1, 3, 4, 7, 11});
}

TEST_CASE("zeta equals exponential of the trace series")
{
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned bits = 0; bits < (1u << (n * n)); ++bits) {
      auto g = from_bits(n, bits);
      CHECK(zeta_of_graph(g).series(13) == exp_series(oracle::traces(g, 12), 12));
    }
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    auto g = from_bits(5, static_cast<unsigned>(rng() & ((1u << 25) - 1)));
    CHECK(zeta_of_graph(g).series(13) == exp_series(oracle::traces(g, 12), 12));
  }
}

TEST_CASE("recurrence reproduces p_n")
{
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    auto g = oracle::random_graph(rng, 5, 12);
    auto rec = recurrence_from_rational(log_derivative(zeta_of_graph(g)), 1);
    CHECK(rec.order() <= g.vertex_count());
    auto terms = rec.terms(1, 40);
    auto tr = oracle::traces(g, 40);
    for (std::size_t n = 0; n < 40; ++n) CHECK(terms[n] == Rational(tr[n]));
  }
}

TEST_CASE("rational function normal form")
{
  // (1 - t^2) / (1 - t) reduces to 1 + t
  RationalFunction f(IntPolynomial{1, 0, -1}, IntPolynomial{1, -1});
  CHECK(f.num() == IntPolynomial{1, 1});
  CHECK(f.den() == IntPolynomial{1});
  RationalFunction g(IntPolynomial{2}, IntPolynomial{-2, 2});
  CHECK(g.den()[0] > 0);
}

TEST_CASE("empirical zero set")
{
  // 1/(1 - t^3): support {0, 3, 6, ...}
  auto rec = recurrence_from_rational(RationalFunction(IntPolynomial{1}, IntPolynomial{1, 0, 0, -1}));
  auto fit = empirical_zero_set(rec, 40);
  REQUIRE(fit.has_value());
  CHECK(fit->period == 3);
  REQUIRE(fit->descriptor.has_value());
  CHECK_FALSE(fit->descriptor->certified());
  CHECK(*fit->descriptor == PeriodSetDescriptor::tail(3));

  // 1/(1 + t): alternating signs, support everything, no zero
  auto alt = empirical_zero_set(
      recurrence_from_rational(RationalFunction(IntPolynomial{1}, IntPolynomial{1, 1})), 20);
  REQUIRE(alt.has_value());
  CHECK(alt->period == 1);
}
