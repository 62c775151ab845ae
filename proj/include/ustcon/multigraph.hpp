#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ustcon {

// Undirected multigraph on vertices [0, n). Parallel edges and self loops are
// kept; edge order is preserved because label assignment depends on it.
struct MultiGraph {
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

// Partition of [0, n) into connected components. Components are numbered by
// their smallest member, ascending, so the numbering is canonical.
struct ComponentPartition {
  std::vector<std::uint32_t> component_of;            // vertex -> component index
  std::vector<std::vector<std::uint32_t>> members;    // sorted vertex lists

  std::size_t count() const { return members.size(); }
  bool same(std::uint32_t u, std::uint32_t v) const {
    return component_of[u] == component_of[v];
  }
};

ComponentPartition connected_components(const MultiGraph& g);

// One flag per component, aligned with ComponentPartition::members.
// A self loop anywhere in a component makes it non-bipartite.
std::vector<bool> bipartite_flags(const MultiGraph& g, const ComponentPartition& comps);

// Whole-graph flag: true iff every component is two-colorable.
bool is_bipartite(const MultiGraph& g);

}  // namespace ustcon
