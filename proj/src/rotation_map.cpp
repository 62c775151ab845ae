#include "ustcon/rotation_map.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ustcon {

RotationValidation validate_rotation_map(const RotationMap& r) {
  RotationValidation out;
  constexpr std::size_t kMaxReported = 8;
  auto flag = [&](const std::string& msg) {
    out.valid = false;
    if (out.violations.size() < kMaxReported) out.violations.push_back(msg);
  };

  if (r.table.size() != r.slots()) {
    flag("table holds " + std::to_string(r.table.size()) + " slots, expected " +
         std::to_string(r.slots()));
    return out;
  }
  for (std::uint64_t s = 0; s < r.table.size(); ++s) {
    const std::uint64_t img = r.table[s];
    if (img >= r.slots()) {
      flag("slot (" + std::to_string(s / r.d) + "," + std::to_string(s % r.d) +
           ") maps outside the slot space");
      continue;
    }
    if (r.table[img] != s) {
      flag("involution broken at slot (" + std::to_string(s / r.d) + "," +
           std::to_string(s % r.d) + ")");
    }
  }
  return out;
}

RotationMap rotation_from_edges(const MultiGraph& g) {
  std::vector<std::uint32_t> degree(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    degree[u] += (u == v) ? 2 : 1;
    if (u != v) degree[v] += 1;
  }
  std::uint32_t d = g.n > 0 ? degree[0] : 0;
  for (std::uint32_t v = 0; v < g.n; ++v) {
    if (degree[v] != d) {
      throw std::invalid_argument("graph is not regular: vertex " + std::to_string(v) +
                                  " has degree " + std::to_string(degree[v]) +
                                  ", vertex 0 has " + std::to_string(d));
    }
  }

  RotationMap r;
  r.n = g.n;
  r.d = d;
  r.table.assign(static_cast<std::size_t>(g.n) * d, 0);
  std::vector<std::uint32_t> next_slot(g.n, 0);
  for (const auto& [u, v] : g.edges) {
    const std::uint32_t i = next_slot[u]++;
    const std::uint32_t j = next_slot[u == v ? u : v]++;
    const std::uint64_t su = static_cast<std::uint64_t>(u) * d + i;
    const std::uint64_t sv = static_cast<std::uint64_t>(v) * d + j;
    r.table[su] = sv;
    r.table[sv] = su;
  }
  return r;
}

MultiGraph multigraph_view(const RotationMap& r) {
  MultiGraph g;
  g.n = static_cast<std::uint32_t>(r.n);
  for (std::uint64_t s = 0; s < r.table.size(); ++s) {
    const std::uint64_t img = r.table[s];
    if (img < s) continue;  // each pair once; fixed points have img == s
    g.edges.emplace_back(static_cast<std::uint32_t>(s / r.d),
                         static_cast<std::uint32_t>(img / r.d));
  }
  return g;
}

Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic> adjacency_matrix(const RotationMap& r) {
  using Mat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  Mat a = Mat::Zero(static_cast<Eigen::Index>(r.n), static_cast<Eigen::Index>(r.n));
  for (std::uint64_t s = 0; s < r.table.size(); ++s) {
    a(static_cast<Eigen::Index>(s / r.d), static_cast<Eigen::Index>(r.table[s] / r.d)) += 1;
  }
  return a;
}

RotationMap restrict_to(const RotationMap& r, const std::vector<std::uint64_t>& subset) {
  std::vector<std::uint64_t> rank(r.n, UINT64_MAX);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (k > 0 && subset[k] <= subset[k - 1]) {
      throw std::invalid_argument("subset must be sorted and duplicate-free");
    }
    if (subset[k] >= r.n) throw std::invalid_argument("subset vertex out of range");
    rank[subset[k]] = k;
  }

  RotationMap out;
  out.n = subset.size();
  out.d = r.d;
  out.table.assign(out.slots(), 0);
  for (std::size_t k = 0; k < subset.size(); ++k) {
    for (std::uint32_t i = 0; i < r.d; ++i) {
      const auto [w, j] = r.rot(subset[k], i);
      if (rank[w] == UINT64_MAX) {
        throw std::invalid_argument("subset is not closed: edge leaves it at vertex " +
                                    std::to_string(subset[k]) + " label " + std::to_string(i));
      }
      out.table[k * r.d + i] = rank[w] * r.d + j;
    }
  }
  return out;
}

RotationMap permute_vertices(const RotationMap& r, const std::vector<std::uint64_t>& perm) {
  RotationMap out;
  out.n = r.n;
  out.d = r.d;
  out.table.assign(r.table.size(), 0);
  for (std::uint64_t v = 0; v < r.n; ++v) {
    for (std::uint32_t i = 0; i < r.d; ++i) {
      const auto [w, j] = r.rot(v, i);
      out.table[perm[v] * r.d + i] = perm[w] * r.d + j;
    }
  }
  return out;
}

RotationMap complete_with_loops(std::uint64_t n) {
  RotationMap r;
  r.n = n;
  r.d = static_cast<std::uint32_t>(n);
  r.table.assign(n * n, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint64_t i = 0; i < n; ++i) r.table[v * n + i] = i * n + v;
  }
  return r;
}

ComponentPartition components_of(const RotationMap& r) {
  return connected_components(multigraph_view(r));
}

}  // namespace ustcon
