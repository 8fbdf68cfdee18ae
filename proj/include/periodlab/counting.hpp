#pragma once

#include <string>
#include <vector>

#include "periodlab/descriptor.hpp"
#include "periodlab/graph.hpp"

namespace periodlab {

// Single-character symbols; words are strings over `alphabet`.
struct ForbiddenWordSpec {
  std::string alphabet;
  std::vector<std::string> forbidden;
};

// Throws std::invalid_argument on an empty alphabet, repeated symbols,
// empty or duplicate forbidden words and words using foreign symbols.
void validate(const ForbiddenWordSpec& spec);

// Edge shift conjugate to the SFT: vertices are the allowed (L-1)-blocks,
// edges the allowed L-blocks, L = max(2, longest forbidden word). Vertex and
// edge ids are the blocks themselves. Throws ResourceLimitExceeded when
// |alphabet|^L exceeds `block_limit`.
DirectedMultigraph higher_block_recode(const ForbiddenWordSpec& spec,
                                       std::size_t block_limit = 1'000'000);

struct CountTable {
  u64 horizon = 0;
  std::vector<BigInt> p;  // p[n-1] = p_n
  std::vector<BigInt> q;
};

CountTable count_table(const DirectedMultigraph& g, u64 horizon);
// q by Moebius inversion of a given p_1..p_N.
CountTable count_table_from_periodic(std::vector<BigInt> p);

// Certified eventual structure of one non-trivial strongly connected
// component.
struct ComponentAnalysis {
  std::vector<std::size_t> vertices;
  u64 period = 0;
  bool single_cycle = false;
  // Absolute n from which every multiple of `period` is a period (resp.
  // least period) of the component.
  u64 ps_threshold = 0;
  u64 lps_threshold = 0;
  PeriodSetDescriptor ps;
  PeriodSetDescriptor lps;
};

std::vector<ComponentAnalysis> analyze_components(const DirectedMultigraph& g);

PeriodSetDescriptor ps_descriptor(const DirectedMultigraph& g);
PeriodSetDescriptor lps_descriptor_sft(const DirectedMultigraph& g);

}  // namespace periodlab
