#pragma once

#include <optional>
#include <set>
#include <vector>

#include "periodlab/descriptor.hpp"
#include "periodlab/graph.hpp"

namespace periodlab {

// Integer polynomial, constant term first, trailing zeros trimmed. The zero
// polynomial has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::vector<BigInt> coeffs);  // NOLINT(google-explicit-constructor)
  IntPolynomial(std::initializer_list<long long> coeffs);

  const std::vector<BigInt>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigInt operator[](std::size_t k) const { return k < c_.size() ? c_[k] : BigInt(0); }

  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

// Exact quotient a / b; b must have constant term +-1 and divide a.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

// num / den with den(0) > 0, gcd(num, den) = 1 over Q and the coefficients
// of num and den jointly coprime.
class RationalFunction {
 public:
  RationalFunction() : den_({1}) {}
  RationalFunction(IntPolynomial num, IntPolynomial den);

  const IntPolynomial& num() const { return num_; }
  const IntPolynomial& den() const { return den_; }

  // Taylor coefficients of t^0 .. t^(count-1).
  std::vector<Rational> series(std::size_t count) const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

// det(I - tA) by fraction-free elimination over Z[t].
IntPolynomial det_one_minus_tA(const DirectedMultigraph& g);

// 1 / det(I - tA).
RationalFunction zeta_of_graph(const DirectedMultigraph& g);

// z'/z as a reduced rational function.
RationalFunction log_derivative(const RationalFunction& z);

// p_1..p_N: coefficient of t^(n-1) in z'/z. Requires z(0) = 1.
std::vector<Rational> log_derivative_series(const RationalFunction& z, std::size_t count);

// a_k = -(b_1 a_{k-1} + ... + b_m a_{k-m}) for k >= initial.size(), where the
// a_k are the Taylor coefficients of a rational function. `offset` shifts
// the external index: term(n) is the coefficient of t^(n - offset).
struct LinearRecurrence {
  std::vector<Rational> b;        // b_1..b_m
  std::vector<Rational> initial;  // a_0..a_{s-1}, s >= m
  u64 offset = 0;

  std::size_t order() const { return b.size(); }
  // a_0 .. a_{count-1}
  std::vector<Rational> coefficients(std::size_t count) const;
  // term(first) .. term(first + count - 1); indices below offset read 0.
  std::vector<Rational> terms(u64 first, std::size_t count) const;
};

// Order is the degree of the denominator; the recurrence holds from
// max(order, deg num + 1) on.
LinearRecurrence recurrence_from_rational(const RationalFunction& f, u64 offset = 0);

// Support of term(1) .. term(N) fitted as eventually periodic: every n >= preperiod
// is in the support iff residues[n % period]. Uncertified by nature.
struct EmpiricalSupport {
  u64 horizon = 0;
  u64 period = 0;
  u64 preperiod = 1;
  std::set<u64> head;          // support below the preperiod
  std::vector<bool> residues;  // size == period
  // Present only when the eventual pattern is a union of sets g*{n >= k}
  // (residue classes closed under the index multiplication); always
  // uncertified.
  std::optional<PeriodSetDescriptor> descriptor;
};

// nullopt when no period <= N/4 with preperiod <= N/2 fits the first N
// terms. Requires N >= 4 * order.
std::optional<EmpiricalSupport> empirical_zero_set(const LinearRecurrence& rec, u64 horizon);

}  // namespace periodlab
