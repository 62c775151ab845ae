#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ustcon/rotation_map.hpp"
#include "ustcon/spectral.hpp"

namespace ustcon {

// A delivered expander together with the evidence for it.  `alpha` is the
// measured lambda_abs2 of the graph, not the search target.
struct ExpanderSpec {
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  std::uint32_t tries = 0;
};

// Union of d/2 seeded permutation matchings on the slot columns (labels 2t and
// 2t+1 are paired through a permutation of the vertices).  Odd d adds one
// perfect matching on the vertices under the last label, so n*d must be even.
// Self loops and parallel edges are kept.
RotationMap random_regular(std::uint64_t n, std::uint32_t d, std::uint64_t seed);

// Samples random_regular with seeds derived from `seed` until a graph with
// measured lambda_abs2 <= alpha appears.  Tries are numbered from zero; the
// returned spec records the measured alpha and the number of tries consumed.
// Throws SearchFailure carrying the best lambda seen after max_tries misses.
std::pair<RotationMap, ExpanderSpec> find_expander(std::uint64_t n, std::uint32_t d, double alpha,
                                                   std::uint64_t seed, std::uint32_t max_tries,
                                                   std::uint64_t dense_cap = kDefaultDenseCap);

// Cayley graph of F_2^m with the given generator multiset: vertex v carries one
// edge to v XOR g_i per generator, labelled by the generator index.  Each
// generator is its own inverse, so every label is a fixed direction.  A zero
// generator yields self loops and is permitted.
RotationMap cayley_f2m(std::uint32_t m, const std::vector<std::uint64_t>& generators,
                       std::uint64_t table_cap = kDefaultTableCap);

}  // namespace ustcon
