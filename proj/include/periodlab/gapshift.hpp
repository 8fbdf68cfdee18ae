#pragma once

#include <set>
#include <vector>

#include "periodlab/descriptor.hpp"
#include "periodlab/sofic.hpp"

namespace periodlab {

struct Progression {
  u64 a = 0;  // first term
  u64 r = 1;  // common difference
  friend bool operator==(const Progression&, const Progression&) = default;
  friend auto operator<=>(const Progression&, const Progression&) = default;
};

// Eventually periodic subset of N0: finite part plus arithmetic tails.
// Construction normalizes: minimal period and preperiod, one progression per
// residue class started as early as the set allows, finite part outside
// every progression. Equal sets therefore compare equal structurally.
class GapSet {
 public:
  GapSet() = default;
  GapSet(std::set<u64> finite, std::vector<Progression> progressions);

  const std::set<u64>& finite() const { return finite_; }
  const std::vector<Progression>& progressions() const { return progressions_; }

  bool contains(u64 n) const;
  bool empty() const { return finite_.empty() && progressions_.empty(); }
  bool is_finite() const { return progressions_.empty(); }
  bool is_cofinite() const;
  std::vector<u64> members_upto(u64 limit) const;
  // Membership is periodic with period period() from preperiod() on.
  u64 preperiod() const { return preperiod_; }
  u64 period() const { return period_; }
  // gcd of all members (0 for the empty set and for {0}).
  u64 gcd() const;
  // {x + k : x in S}
  GapSet shifted_up(u64 k) const;

  friend bool operator==(const GapSet&, const GapSet&) = default;

 private:
  std::set<u64> finite_;
  std::vector<Progression> progressions_;
  u64 preperiod_ = 0;
  u64 period_ = 1;
};

enum class GapClass { sft, sofic_not_sft };
GapClass classify_gap(const GapSet& s);

struct AlmostSumClosure {
  std::set<u64> members;  // exact, within [1, N]
  PeriodSetDescriptor descriptor;
  // Every multiple of gcd(s) from here on is in the closure.
  u64 threshold = 0;
};

// Sums of elements of s using either one term or at least two distinct
// values. s must be a nonempty set of positive integers.
AlmostSumClosure almost_sum_closure(const GapSet& s, u64 horizon);
AlmostSumClosure almost_sum_closure(const std::set<u64>& s, u64 horizon);

// Least period set of the S-gap shift.
PeriodSetDescriptor gap_lps(const GapSet& s);

// Rejection of a request that is not a gap-shift least period set. When the
// set fails almost sum-closure, (x, y) is a pair of distinct members whose
// sum is missing; both are zero otherwise.
class GapShapeError : public ShapeError {
 public:
  GapShapeError(const std::string& what, u64 x, u64 y) : ShapeError(what), x(x), y(y) {}
  u64 x;
  u64 y;
};

// A gap set whose gap shift has least period set q. A finite S (a shift of
// finite type) is returned whenever q is almost sum-closed.
GapSet gap_realize(const PeriodSetDescriptor& q);

// Right-resolving presentation: a 0-chain from the root, with a 1-edge back
// to the root after m zeros for each m in S, closed into a 0-cycle when S is
// infinite.
LabeledGraph gap_to_labeled_graph(const GapSet& s);

}  // namespace periodlab
