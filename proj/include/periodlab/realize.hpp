#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "periodlab/descriptor.hpp"
#include "periodlab/graph.hpp"
#include "periodlab/sofic.hpp"

namespace periodlab {

enum class RealizeTarget {
  irreducible_sft,
  reducible_sft,
  irreducible_sofic,
  arbitrary_subshift,
  period_set_variant,
};

std::string to_string(RealizeTarget t);
std::optional<RealizeTarget> parse_realize_target(const std::string& name);

// {d} -> d-cycle. d S with S = F U {n >= N} -> N-cycle with an f-cycle per
// f in F at distinct vertices and (N+i)-cycles on the f_1-cycle (an
// (N+1)-cycle on the N-cycle when F is empty), every edge subdivided d times.
// Throws ShapeError for any other shape.
DirectedMultigraph realize_irreducible_sft(const PeriodSetDescriptor& desc);

// One irreducible part per finite element and per component.
DirectedMultigraph realize_reducible_sft(const PeriodSetDescriptor& desc);

struct TorusSection {
  u64 d = 1;
  u64 k = 0;  // the section covers most of d(N + k)
  std::string u, v;
  u64 t = 2;  // grid size
  std::set<u64> periods_below;  // its least periods below `bound`
};

struct SoficRealization {
  LabeledGraph graph;
  u64 d_star = 1;
  u64 k_star = 1;
  std::vector<TorusSection> tori;
  // Requested periods not produced by any torus; each gets a cycle section.
  std::set<u64> missed;
  std::vector<std::pair<u64, u64>> cycles;  // (j, c_j)
};

// Irreducible binary sofic presentation. Throws ShapeError for a finite
// request with more than one element.
SoficRealization realize_sofic_detailed(const PeriodSetDescriptor& desc);
LabeledGraph realize_sofic(const PeriodSetDescriptor& desc);

// Subshift of the full 2-shift with prescribed least periods, given by its
// generating words. Closure points are only the ones that matter for
// periodicity: 0^inf when 1 is in an infinite S.
class ArbitrarySubshift {
 public:
  // Finite S as an ascending list.
  explicit ArbitrarySubshift(std::vector<u64> finite_set);
  // Membership oracle for an infinite S.
  explicit ArbitrarySubshift(std::function<bool(u64)> member);

  bool infinite() const { return infinite_; }
  bool contains_one() const { return member_(1); }
  // Generator words u_i with |u_i| <= length, in order of i.
  std::vector<std::string> generators_upto(u64 length) const;
  std::vector<std::string> first_generators(std::size_t count) const;
  // One word per periodic orbit of least period <= N.
  std::vector<std::string> periodic_points_upto(u64 horizon) const;
  std::set<u64> least_periods_upto(u64 horizon) const;
  // Whether w occurs in a point, looking at generators up to the given
  // length (at least |w| + 1) and at the closure points.
  bool occurs(const std::string& w, u64 horizon) const;

 private:
  std::string generator(u64 k) const;

  std::function<bool(u64)> member_;
  bool infinite_ = false;
  u64 first_ = 0;
  u64 limit_ = 0;  // largest element for a finite S
};

ArbitrarySubshift realize_arbitrary(std::vector<u64> finite_set);
ArbitrarySubshift realize_arbitrary(std::function<bool(u64)> member);

// Every multiple of every member is a member.
bool is_multiplicatively_closed(const PeriodSetDescriptor& desc);

// A sofic shift whose period set (and least period set) is desc. Throws
// ShapeError unless desc is multiplicatively closed.
LabeledGraph realize_period_set(const PeriodSetDescriptor& desc);

}  // namespace periodlab
