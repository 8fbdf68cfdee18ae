#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace periodlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using u64 = std::uint64_t;

// Thrown when an enumeration exceeds its configured budget. Kept distinct from
// an empty result so callers can tell "nothing there" from "gave up".
class ResourceLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when a request does not have the shape an operation requires.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b);  // throws std::overflow_error
u64 gcd_of(std::span<const u64> values);

// Moebius function by trial division. n must be in [1, 10^12].
int mobius(u64 n);
std::vector<u64> divisors(u64 n);  // ascending

// Least rotation period of a word: the length of its primitive root.
std::size_t least_rotation_period(const std::string& word);
bool is_primitive_word(const std::string& word);

// The additive monoid generated by a finite set of positive integers with
// gcd 1, described by its Apery set with respect to the smallest generator.
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::vector<u64> generators);

  bool contains(u64 n) const;
  // Largest integer not in the semigroup; -1 when the semigroup is all of N0.
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<u64>& generators() const { return generators_; }

 private:
  std::vector<u64> generators_;
  std::vector<u64> apery_;  // apery_[r] = least element congruent to r mod m
  std::int64_t frobenius_ = -1;
};

}  // namespace periodlab
