#pragma once

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "ustcon/multigraph.hpp"
#include "ustcon/rot_oracle.hpp"
#include "ustcon/rotation_map.hpp"
#include "ustcon/spectral.hpp"

namespace ustcon {

// Parameters of the iterated expander transform. H is d-regular on d^k
// vertices; one iteration zig-zags with H and raises the result to the p-th
// power, so k = 2p keeps every level d^k-regular.
struct TransformParams {
  std::uint32_t d = 4;
  std::uint32_t k = 4;
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  double alpha = 0.95;  // certified lambda_abs2 of H

  void validate() const;
  std::uint64_t label_radix() const;  // d^k
};

// Iteration count that drives the walk bound below 1/2 for an input with the
// regularity floor on its spectral gap: max(1, 2 * ceil(log2(d_in * n_in^2))).
std::uint32_t transform_length(std::uint64_t n_in, std::uint64_t d_in);

// Degree-d^k regularization of an arbitrary multigraph on n vertices, laid out
// on n^2 vertices (v, w) = v*n + w. Labels 0 and 1 walk a length-n cycle on
// each cloud (v, .), label 2 crosses (v, w) <-> (w, v) when {v, w} is an edge
// and is a fixed-point loop otherwise, and labels 3..d^k-1 are fixed-point
// loops. Connectivity matches the input; the loops kill bipartiteness.
// Requires d^k >= 3.
class RegularizedOracle : public RotationOracle {
 public:
  RegularizedOracle(const MultiGraph& g, std::uint64_t dk);
  std::uint64_t vertex_count() const override { return n_ * n_; }
  std::uint32_t degree() const override { return static_cast<std::uint32_t>(dk_); }
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                              WorkspaceMeter* meter) const override;

 private:
  // Below this vertex count the crossing test uses an n^2 bitmap.
  static constexpr std::uint64_t kDenseAdjacencyLimit = 8192;

  std::uint64_t n_;
  std::uint64_t dk_;
  std::unordered_set<std::uint64_t> adjacent_;  // packed (v, w), both orders
  std::vector<bool> dense_;                     // same keys when n is small
};

RotationMap regularize(const MultiGraph& g, std::uint64_t dk,
                       std::uint64_t table_cap = kDefaultTableCap);

// One transform iteration: (g_prev zigzag h)^p.
RotationMap transform_step(const RotationMap& g_prev, const RotationMap& h, std::uint32_t p,
                           std::uint64_t table_cap = kDefaultTableCap);

// All levels G_0..G_l materialized. G_0 is the input.
std::vector<RotationMap> transform_iterates(const RotationMap& g_reg, const RotationMap& h,
                                            const TransformParams& params,
                                            std::uint64_t table_cap = kDefaultTableCap);

RotationMap materialize_transform(const RotationMap& g_reg, const RotationMap& h,
                                  const TransformParams& params,
                                  std::uint64_t table_cap = kDefaultTableCap);

// Vertex of level-i graph: a base vertex plus one label per completed level,
// packed base-first: ((base*d^k + a_0)*d^k + a_1)...
struct ExpandedVertex {
  std::uint64_t base = 0;
  std::vector<std::uint32_t> labels;
};

std::uint64_t encode_expanded(const ExpandedVertex& v, std::uint64_t dk);
ExpandedVertex decode_expanded(std::uint64_t id, std::uint32_t level, std::uint64_t dk);

// Lazy evaluator of the level-l transform. Evaluates one rotation by walking
// the recursion over levels; workspace is one base register, l+1 labels of k
// digits each, and two bookkeeping words per live recursion frame, so the
// peak is affine in l and never depends on the (d^k)^l vertex count.
class TransformOracle : public RotationOracle {
 public:
  TransformOracle(const RotationOracle& g0, const RotationMap& h, const TransformParams& params);

  std::uint64_t vertex_count() const override;
  std::uint32_t degree() const override { return static_cast<std::uint32_t>(dk_); }
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                              WorkspaceMeter* meter) const override;

  // Evaluation counters since construction (base-level and H lookups).
  std::uint64_t base_queries() const { return base_queries_; }
  std::uint64_t h_queries() const { return h_queries_; }
  // Words of per-query scratch the evaluator owns: the label array plus the
  // base register. Independent of vertex count by construction.
  std::int64_t scratch_words() const { return static_cast<std::int64_t>(params_.l) + 2; }

 private:
  void eval_level(std::uint32_t level, std::uint64_t& base, std::uint32_t* labels,
                  WorkspaceMeter* meter) const;
  std::uint32_t digit_at(std::uint32_t label, std::uint32_t pos) const;
  std::uint32_t with_digit(std::uint32_t label, std::uint32_t pos, std::uint32_t digit) const;
  std::uint32_t reverse_digits(std::uint32_t label) const;

  const RotationOracle* g0_;
  const RotationMap* h_;
  TransformParams params_;
  std::uint64_t dk_;
  std::vector<std::uint32_t> pow_d_;  // d^0..d^k
  mutable std::uint64_t base_queries_ = 0;
  mutable std::uint64_t h_queries_ = 0;
};

// Walk-bound trace of the materialized transform, one row per level.
struct TraceRow {
  std::uint32_t iteration = 0;
  std::uint64_t n_vertices = 0;
  std::uint64_t degree = 0;
  double lambda_abs2 = 0.0;
  double bound = 1.0;
  double slack = 0.0;
};

std::vector<TraceRow> transform_trace(const RotationMap& g_reg, const RotationMap& h,
                                      const TransformParams& params,
                                      std::uint64_t table_cap = kDefaultTableCap,
                                      std::uint64_t dense_cap = kDefaultDenseCap);

// The walk-bound recurrence alone: lambda_{i+1} = zigzag_bound(lambda_i, alpha)^p.
std::vector<double> transform_bound_recurrence(double lambda0, double alpha, std::uint32_t p,
                                               std::uint32_t l);

std::string trace_csv_header();
std::string trace_csv_row(const TraceRow& row);

}  // namespace ustcon
