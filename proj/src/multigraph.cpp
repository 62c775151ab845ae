#include "ustcon/multigraph.hpp"

#include <algorithm>
#include <queue>

namespace ustcon {

namespace {

std::vector<std::vector<std::uint32_t>> neighbor_lists(const MultiGraph& g) {
  std::vector<std::vector<std::uint32_t>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    if (u != v) adj[v].push_back(u);
  }
  return adj;
}

}  // namespace

ComponentPartition connected_components(const MultiGraph& g) {
  const auto adj = neighbor_lists(g);
  ComponentPartition out;
  out.component_of.assign(g.n, UINT32_MAX);
  for (std::uint32_t start = 0; start < g.n; ++start) {
    if (out.component_of[start] != UINT32_MAX) continue;
    const auto comp = static_cast<std::uint32_t>(out.members.size());
    std::vector<std::uint32_t> found;
    std::queue<std::uint32_t> frontier;
    out.component_of[start] = comp;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::uint32_t v = frontier.front();
      frontier.pop();
      found.push_back(v);
      for (std::uint32_t w : adj[v]) {
        if (out.component_of[w] == UINT32_MAX) {
          out.component_of[w] = comp;
          frontier.push(w);
        }
      }
    }
    std::sort(found.begin(), found.end());
    out.members.push_back(std::move(found));
  }
  return out;
}

std::vector<bool> bipartite_flags(const MultiGraph& g, const ComponentPartition& comps) {
  const auto adj = neighbor_lists(g);
  std::vector<bool> flags(comps.count(), true);
  std::vector<int> color(g.n, -1);
  for (const auto& [u, v] : g.edges) {
    if (u == v) flags[comps.component_of[u]] = false;
  }
  for (std::size_t c = 0; c < comps.count(); ++c) {
    if (!flags[c]) continue;
    const std::uint32_t start = comps.members[c][0];
    color[start] = 0;
    std::queue<std::uint32_t> frontier;
    frontier.push(start);
    while (!frontier.empty() && flags[c]) {
      const std::uint32_t v = frontier.front();
      frontier.pop();
      for (std::uint32_t w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          frontier.push(w);
        } else if (color[w] == color[v]) {
          flags[c] = false;
          break;
        }
      }
    }
  }
  return flags;
}

bool is_bipartite(const MultiGraph& g) {
  const auto comps = connected_components(g);
  const auto flags = bipartite_flags(g, comps);
  return std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
}

}  // namespace ustcon
