#pragma once

#include <functional>
#include <string>

#include "periodlab/counting.hpp"
#include "periodlab/descriptor.hpp"
#include "periodlab/graph.hpp"

namespace periodlab {

enum class Transitivity { mixing, transitive, general };
enum class SystemClass { sft, sofic, fp };

struct TableOneForm {
  Transitivity row = Transitivity::general;
  SystemClass column = SystemClass::sft;

  // "(*)": a finite least period set must be a singleton.
  bool starred() const;
  std::string shape() const;  // the cell as text, e.g. "{d} or dS"
};

// d * S with S cofinite and d the gcd of the set.
bool is_scaled_cofinite(const PeriodSetDescriptor& desc);

bool matches_table_form(const PeriodSetDescriptor& desc, TableOneForm cell);

// Strict Sharkovskii order: 3 < 5 < 7 < ... < 2*3 < 2*5 < ... < 4 < 2 < 1.
// Throws std::invalid_argument for m == n or a zero argument.
bool sharkovskii_less(u64 m, u64 n);

// {m : s precedes or equals m}, or the powers of two.
struct SharkovskiiTail {
  enum class Kind { tail, powers_of_two };
  Kind kind = Kind::tail;
  u64 start = 1;

  static SharkovskiiTail from(u64 s) { return {Kind::tail, s}; }
  static SharkovskiiTail powers_of_two() { return {Kind::powers_of_two, 0}; }
  bool contains(u64 m) const;
};

struct TailCheck {
  bool is_tail = true;
  // On failure: `member` is in the set, `missing` follows it and is not.
  u64 member = 0;
  u64 missing = 0;
};

// Exhaustive on [1, N]. The witness pair is the first violation met when
// walking [1, N] in Sharkovskii order.
TailCheck is_sharkovskii_tail(const std::function<bool(u64)>& member, u64 horizon);
TailCheck is_sharkovskii_tail(const SharkovskiiTail& tail, u64 horizon);

// Rational bounds lower <= spectral radius <= upper, from Collatz-Wielandt
// quotients of x = (A + I)^k 1 with exact integer arithmetic.
struct PerronBounds {
  Rational lower = 0;
  Rational upper = 0;
};
PerronBounds perron_bounds(const DirectedMultigraph& g, unsigned iterations = 64);

struct KriegerVerdict {
  enum class Kind { entropy_fail, period_fail, pass_at_desk_scale };
  Kind kind = Kind::pass_at_desk_scale;
  // For entropy_fail: true when h(X) >= h(Y) is proved, false when the
  // bounds could not separate the two.
  bool entropy_certified = false;
  PerronBounds x_bounds;
  PerronBounds y_bounds;
  u64 horizon = 0;
  u64 witness = 0;  // least n with q_n(X) > q_n(Y) for period_fail
  BigInt witness_qx;
  BigInt witness_qy;
  // q_n(X) <= q_n(Y) holds for every n, not just up to the horizon: set when
  // X has finitely many least periods, all at most the horizon.
  bool all_n = false;
};

std::string to_string(KriegerVerdict::Kind kind);

// Entropy is compared first; past that, throws ShapeError unless y is mixing.
KriegerVerdict krieger_check(const DirectedMultigraph& x, const DirectedMultigraph& y,
                             u64 horizon);

}  // namespace periodlab
