#include "periodlab/numeric.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

namespace periodlab {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b)
{
  if (a == 0 || b == 0)
    return 0;
  const u64 g = std::gcd(a, b);
  const u64 q = a / g;
  if (q > std::numeric_limits<u64>::max() / b)
    throw std::overflow_error("lcm overflows 64 bits");
  return q * b;
}

u64 gcd_of(std::span<const u64> values)
{
  u64 g = 0;
  for (u64 v : values)
    g = std::gcd(g, v);
  return g;
}

int mobius(u64 n)
{
  if (n == 0 || n > 1'000'000'000'000ULL)
    throw std::invalid_argument("mobius: argument out of range");
  int sign = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    sign = -sign;
  }
  if (n > 1)
    sign = -sign;
  return sign;
}

std::vector<u64> divisors(u64 n)
{
  std::vector<u64> small, large;
  for (u64 k = 1; k * k <= n; ++k) {
    if (n % k == 0) {
      small.push_back(k);
      if (k != n / k)
        large.push_back(n / k);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::size_t least_rotation_period(const std::string& word)
{
  const std::size_t n = word.size();
  if (n == 0)
    return 0;
  // KMP failure function; the border gives the smallest shift period.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && word[i] != word[k])
      k = fail[k - 1];
    if (word[i] == word[k])
      ++k;
    fail[i] = k;
  }
  const std::size_t p = n - fail[n - 1];
  return (n % p == 0) ? p : n;
}

bool is_primitive_word(const std::string& word)
{
  return !word.empty() && least_rotation_period(word) == word.size();
}

NumericalSemigroup::NumericalSemigroup(std::vector<u64> generators)
    : generators_(std::move(generators))
{
  std::erase(generators_, 0);
  std::sort(generators_.begin(), generators_.end());
  generators_.erase(std::unique(generators_.begin(), generators_.end()),
                    generators_.end());
  if (generators_.empty() || gcd_of(generators_) != 1)
    throw std::invalid_argument("NumericalSemigroup: generators must have gcd 1");

  // Shortest paths on residues modulo the smallest generator.
  const u64 m = generators_.front();
  constexpr u64 inf = std::numeric_limits<u64>::max();
  apery_.assign(m, inf);
  apery_[0] = 0;
  using Item = std::pair<u64, u64>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  pq.emplace(0, 0);
  while (!pq.empty()) {
    auto [dist, r] = pq.top();
    pq.pop();
    if (dist != apery_[r])
      continue;
    for (u64 g : generators_) {
      const u64 nd = dist + g;
      const u64 nr = (r + g) % m;
      if (nd < apery_[nr]) {
        apery_[nr] = nd;
        pq.emplace(nd, nr);
      }
    }
  }
  const u64 top = *std::max_element(apery_.begin(), apery_.end());
  frobenius_ = static_cast<std::int64_t>(top) - static_cast<std::int64_t>(m);
}

bool NumericalSemigroup::contains(u64 n) const
{
  return n >= apery_[n % apery_.size()];
}

}  // namespace periodlab
