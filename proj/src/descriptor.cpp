#include "periodlab/descriptor.hpp"

#include <algorithm>
#include <sstream>

namespace periodlab {

bool DescriptorComponent::contains(u64 n) const
{
  if (n == 0 || n % d != 0)
    return false;
  const u64 k = n / d;
  return k >= threshold || extras.count(k) > 0;
}

PeriodSetDescriptor::PeriodSetDescriptor(std::set<u64> finite,
                                         std::vector<DescriptorComponent> components,
                                         bool certified)
    : finite_(std::move(finite)), components_(std::move(components)), certified_(certified)
{
  canonicalize();
}

PeriodSetDescriptor PeriodSetDescriptor::singleton(u64 n)
{
  return PeriodSetDescriptor({n}, {});
}

PeriodSetDescriptor PeriodSetDescriptor::tail(u64 d, u64 threshold)
{
  return PeriodSetDescriptor({}, {DescriptorComponent{d, threshold, {}}});
}

void PeriodSetDescriptor::canonicalize()
{
  finite_.erase(0);
  for (auto& c : components_) {
    if (c.d == 0)
      throw std::invalid_argument("descriptor component with scale 0");
    c.threshold = std::max<u64>(c.threshold, 1);
    for (u64 e : c.extras) {
      if (e >= 1 && e < c.threshold)
        finite_.insert(e * c.d);
    }
    c.extras.clear();
  }

  // Lower thresholds while the next multiple down is already in the set.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& c : components_) {
      while (c.threshold > 1 && contains(c.d * (c.threshold - 1))) {
        --c.threshold;
        changed = true;
      }
    }
  }

  auto inside = [](const DescriptorComponent& a, const DescriptorComponent& b) {
    return a.d % b.d == 0 && a.d * a.threshold >= b.d * b.threshold;
  };
  std::sort(components_.begin(), components_.end(), [](const auto& a, const auto& b) {
    return std::pair(a.d, a.threshold) < std::pair(b.d, b.threshold);
  });
  components_.erase(std::unique(components_.begin(), components_.end()), components_.end());
  std::vector<DescriptorComponent> kept;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < components_.size() && !subsumed; ++j)
      subsumed = j != i && inside(components_[i], components_[j]);
    if (!subsumed)
      kept.push_back(components_[i]);
  }
  components_ = std::move(kept);

  std::erase_if(finite_, [&](u64 n) {
    return std::any_of(components_.begin(), components_.end(),
                       [n](const auto& c) { return c.contains(n); });
  });
}

bool PeriodSetDescriptor::contains(u64 n) const
{
  if (finite_.count(n))
    return true;
  return std::any_of(components_.begin(), components_.end(),
                     [n](const auto& c) { return c.contains(n); });
}

std::vector<u64> PeriodSetDescriptor::members_upto(u64 limit) const
{
  std::vector<u64> out;
  for (u64 n = 1; n <= limit; ++n) {
    if (contains(n))
      out.push_back(n);
  }
  return out;
}

u64 PeriodSetDescriptor::stable_bound() const
{
  u64 b = finite_.empty() ? 0 : *finite_.rbegin() + 1;
  for (const auto& c : components_)
    b = std::max(b, c.d * c.threshold);
  return b;
}

u64 PeriodSetDescriptor::period_bound() const
{
  u64 l = 1;
  for (const auto& c : components_)
    l = lcm_u64(l, c.d);
  return l;
}

PeriodSetDescriptor PeriodSetDescriptor::scaled(u64 factor) const
{
  if (factor == 0)
    throw std::invalid_argument("descriptor scale factor must be positive");
  std::set<u64> f;
  for (u64 n : finite_)
    f.insert(n * factor);
  std::vector<DescriptorComponent> comps = components_;
  for (auto& c : comps)
    c.d *= factor;
  return PeriodSetDescriptor(std::move(f), std::move(comps), certified_);
}

PeriodSetDescriptor PeriodSetDescriptor::united(const PeriodSetDescriptor& other) const
{
  std::set<u64> f = finite_;
  f.insert(other.finite_.begin(), other.finite_.end());
  std::vector<DescriptorComponent> comps = components_;
  comps.insert(comps.end(), other.components_.begin(), other.components_.end());
  return PeriodSetDescriptor(std::move(f), std::move(comps), certified_ && other.certified_);
}

bool PeriodSetDescriptor::same_set(const PeriodSetDescriptor& other) const
{
  const u64 bound = std::max(stable_bound(), other.stable_bound()) +
                    lcm_u64(period_bound(), other.period_bound());
  for (u64 n = 1; n <= bound; ++n) {
    if (contains(n) != other.contains(n))
      return false;
  }
  return true;
}

std::string PeriodSetDescriptor::to_string() const
{
  if (empty())
    return "{}";
  std::ostringstream os;
  bool first = true;
  if (!finite_.empty()) {
    os << '{';
    for (u64 n : finite_) {
      os << (first ? "" : ",") << n;
      first = false;
    }
    os << '}';
  }
  for (const auto& c : components_) {
    if (!first)
      os << " U ";
    os << c.d << "*{n>=" << c.threshold << '}';
    first = false;
  }
  return os.str();
}

PeriodSetDescriptor descriptor_union(const PeriodSetDescriptor& a, const PeriodSetDescriptor& b)
{
  return a.united(b);
}

PeriodSetDescriptor descriptor_scale(const PeriodSetDescriptor& a, u64 d) { return a.scaled(d); }

bool descriptor_member(const PeriodSetDescriptor& a, u64 n) { return a.contains(n); }

bool descriptor_equal(const PeriodSetDescriptor& a, const PeriodSetDescriptor& b)
{
  return a.same_set(b);
}

}  // namespace periodlab
