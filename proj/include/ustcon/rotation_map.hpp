#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "ustcon/multigraph.hpp"

namespace ustcon {

// Default cap on materialized rotation tables (entries = n * d).
inline constexpr std::uint64_t kDefaultTableCap = 1ULL << 20;

// Rotation map of a d-regular undirected multigraph on [0, n): an involutive
// permutation of the edge slots (v, i). Slot (v, i) is packed as v*d + i and
// the table stores the packed image slot.
struct RotationMap {
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  std::vector<std::uint64_t> table;

  std::uint64_t slots() const { return n * d; }

  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i) const {
    const std::uint64_t s = table[v * d + i];
    return {s / d, static_cast<std::uint32_t>(s % d)};
  }
};

// Violations found by validate_rotation_map, capped at a small count.
struct RotationValidation {
  bool valid = true;
  std::vector<std::string> violations;
};

// Checks table size, slot range, involution, and (implied) regularity.
RotationValidation validate_rotation_map(const RotationMap& r);

// Builds a rotation map from a regular multigraph. Edge slots are numbered by
// first appearance in the edge list; a self loop takes two consecutive slots
// of its vertex, paired with each other. Throws std::invalid_argument if the
// graph is not regular.
RotationMap rotation_from_edges(const MultiGraph& g);

// Multigraph view of a rotation map: one edge per slot pair, and one self loop
// per fixed-point slot. Connectivity and bipartiteness agree with the map.
MultiGraph multigraph_view(const RotationMap& r);

// Adjacency counts A(u, v) = #{(i, j) : rot(u, i) = (v, j)}. A fixed-point
// slot contributes one to its diagonal entry, a slot-paired loop contributes
// two. Row sums equal d.
Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const RotationMap& r);

// Restriction to a sorted vertex subset that is closed under the map (a union
// of connected components). Vertices are renumbered order-preservingly.
// Throws std::invalid_argument if an edge leaves the subset.
RotationMap restrict_to(const RotationMap& r, const std::vector<std::uint64_t>& subset);

// Relabels vertices by a permutation: vertex v becomes perm[v], labels kept.
RotationMap permute_vertices(const RotationMap& r, const std::vector<std::uint64_t>& perm);

// Rotation map of the complete graph with a self loop at every vertex:
// rot(v, i) = (i, v). n-regular on n vertices, adjacency all-ones.
RotationMap complete_with_loops(std::uint64_t n);

ComponentPartition components_of(const RotationMap& r);

}  // namespace ustcon
