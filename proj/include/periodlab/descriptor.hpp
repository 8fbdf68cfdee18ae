#pragma once

#include <set>
#include <string>
#include <vector>

#include "periodlab/numeric.hpp"

namespace periodlab {

// d * ({n : n >= threshold} U extras), extras a subset of [1, threshold).
struct DescriptorComponent {
  u64 d = 1;
  u64 threshold = 1;
  std::set<u64> extras;

  bool contains(u64 n) const;
  friend bool operator==(const DescriptorComponent&, const DescriptorComponent&) = default;
};

// Finite description of a set F U d_1 S_1 U ... U d_k S_k of positive
// integers with every S_i cofinite. Construction always leaves the value in
// canonical form:
//   - component extras are folded into the finite part,
//   - thresholds are lowered as far as the set allows,
//   - no component is contained in another,
//   - the finite part avoids every component,
//   - components are sorted by (d, threshold).
class PeriodSetDescriptor {
 public:
  PeriodSetDescriptor() = default;
  PeriodSetDescriptor(std::set<u64> finite, std::vector<DescriptorComponent> components,
                      bool certified = true);

  static PeriodSetDescriptor singleton(u64 n);
  // d * {n >= threshold}
  static PeriodSetDescriptor tail(u64 d, u64 threshold = 1);

  const std::set<u64>& finite() const { return finite_; }
  const std::vector<DescriptorComponent>& components() const { return components_; }
  bool certified() const { return certified_; }
  void set_certified(bool c) { certified_ = c; }

  bool empty() const { return finite_.empty() && components_.empty(); }
  bool is_finite() const { return components_.empty(); }
  bool contains(u64 n) const;
  std::vector<u64> members_upto(u64 limit) const;

  // Beyond this bound membership is periodic with period period_bound().
  u64 stable_bound() const;
  u64 period_bound() const;

  PeriodSetDescriptor scaled(u64 factor) const;
  PeriodSetDescriptor united(const PeriodSetDescriptor& other) const;

  // Set equality; the certified flags are not compared.
  bool same_set(const PeriodSetDescriptor& other) const;
  friend bool operator==(const PeriodSetDescriptor& a, const PeriodSetDescriptor& b)
  {
    return a.same_set(b);
  }

  // Like "{2} U 1*{n>=5}" for diagnostics.
  std::string to_string() const;

 private:
  void canonicalize();

  std::set<u64> finite_;
  std::vector<DescriptorComponent> components_;
  bool certified_ = true;
};

PeriodSetDescriptor descriptor_union(const PeriodSetDescriptor& a, const PeriodSetDescriptor& b);
PeriodSetDescriptor descriptor_scale(const PeriodSetDescriptor& a, u64 d);
bool descriptor_member(const PeriodSetDescriptor& a, u64 n);
bool descriptor_equal(const PeriodSetDescriptor& a, const PeriodSetDescriptor& b);

}  // namespace periodlab
