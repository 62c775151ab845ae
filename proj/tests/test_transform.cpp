#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ustcon/errors.hpp"
#include "ustcon/expanders.hpp"
#include "ustcon/multigraph.hpp"
#include "ustcon/rng.hpp"
#include "ustcon/rotation_map.hpp"
#include "ustcon/spectral.hpp"
#include "ustcon/transform.hpp"
#include "support.hpp"

using namespace ustcon;
using namespace ustcon::testing;

namespace {

TransformParams small_params(std::uint32_t l, double alpha = 0.95) {
  TransformParams p;
  p.d = 4;
  p.k = 2;
  p.p = 1;
  p.l = l;
  p.alpha = alpha;
  return p;
}

RotationMap desk_h() {
  static RotationMap h = [] {
    auto [g, spec] = find_expander(16, 4, 0.9, 42, 200);
    return g;
  }();
  return h;
}

}  // namespace

TEST_CASE("transform_length matches the doubling count") {
  // max(1, 2 * ceil(log2(d * n^2)))
  CHECK(transform_length(4, 16) == 2 * 8);
  CHECK(transform_length(2, 3) == 2 * 4);   // 3*4=12, ceil log2 = 4
  CHECK(transform_length(1, 3) == 2 * 2);   // 3
  CHECK(transform_length(1, 1) == 1);       // log2(1) = 0 floors at 1
  CHECK(transform_length(4096, 16) == 2 * 28);
}

TEST_CASE("parameter validation rejects broken shapes") {
  TransformParams p = small_params(1);
  CHECK_NOTHROW(p.validate());
  CHECK(p.label_radix() == 16);

  TransformParams odd = p;
  odd.d = 3;
  CHECK_THROWS_AS(odd.validate(), std::invalid_argument);
  odd.d = 1;
  CHECK_THROWS_AS(odd.validate(), std::invalid_argument);

  TransformParams badk = p;
  badk.k = 3;
  CHECK_THROWS_AS(badk.validate(), std::invalid_argument);
  badk.k = 4;  // p still 1, so k != 2p
  CHECK_THROWS_AS(badk.validate(), std::invalid_argument);

  TransformParams badl = p;
  badl.l = 0;
  CHECK_THROWS_AS(badl.validate(), std::invalid_argument);

  TransformParams bada = p;
  bada.alpha = 1.5;
  CHECK_THROWS_AS(bada.validate(), std::invalid_argument);
  bada.alpha = -0.1;
  CHECK_THROWS_AS(bada.validate(), std::invalid_argument);

  TransformParams wide = p;
  wide.d = 4;
  wide.k = 4;
  wide.p = 2;
  CHECK_NOTHROW(wide.validate());
  CHECK(wide.label_radix() == 256);
}

TEST_CASE("regularization is a valid involution with the advertised shape") {
  for (std::uint32_t idx : {0u, 7u, 42u, 113u, 199u}) {
    const MultiGraph g = corpus_graph(idx);
    const RotationMap reg = regularize(g, 16);
    CHECK(reg.n == static_cast<std::uint64_t>(g.n) * g.n);
    CHECK(reg.d == 16);
    const RotationValidation v = validate_rotation_map(reg);
    CHECK(v.valid);
  }
}

TEST_CASE("regularization preserves connectivity and kills bipartiteness") {
  for (std::uint32_t idx = 0; idx < 40; ++idx) {
    const MultiGraph g = corpus_graph(idx);
    const RotationMap reg = regularize(g, 16);
    const auto base = connected_components(g);
    const auto lifted = components_of(reg);
    CHECK(lifted.count() == base.count());
    // Cloud corners (v, 0) land in the component of their base vertex.
    for (std::uint32_t u = 0; u < g.n; ++u) {
      for (std::uint32_t w = 0; w < g.n; ++w) {
        const bool same_base = base.same(u, w);
        const bool same_lift =
            lifted.same(static_cast<std::uint64_t>(u) * g.n, static_cast<std::uint64_t>(w) * g.n);
        CHECK(same_lift == same_base);
      }
    }
    const auto flags = bipartite_flags(multigraph_view(reg), lifted);
    for (bool f : flags) CHECK_FALSE(f);
  }
}

TEST_CASE("regularization label conventions") {
  // Path 0-1 on 2 vertices, dk = 4. Clouds are 2-cycles on labels 0/1.
  MultiGraph g;
  g.n = 2;
  g.edges.push_back({0, 1});
  const RotationMap reg = regularize(g, 4);
  // (0,0) -> (0,1) along the cloud cycle.
  CHECK(reg.rot(0, 0) == std::pair<std::uint64_t, std::uint32_t>{1, 1});
  CHECK(reg.rot(1, 1) == std::pair<std::uint64_t, std::uint32_t>{0, 0});
  // Label 2 crosses (0,1) <-> (1,0) because {0,1} is an edge.
  CHECK(reg.rot(1, 2) == std::pair<std::uint64_t, std::uint32_t>{2, 2});
  CHECK(reg.rot(2, 2) == std::pair<std::uint64_t, std::uint32_t>{1, 2});
  // (0,0) has no {0,0} loop: label 2 stays put.
  CHECK(reg.rot(0, 2) == std::pair<std::uint64_t, std::uint32_t>{0, 2});
  // Labels >= 3 are fixed points everywhere.
  for (std::uint64_t v = 0; v < 4; ++v)
    CHECK(reg.rot(v, 3) == std::pair<std::uint64_t, std::uint32_t>{v, 3});
}

TEST_CASE("regularize degree below three is rejected") {
  MultiGraph g;
  g.n = 2;
  g.edges.push_back({0, 1});
  CHECK_THROWS_AS(regularize(g, 2), std::invalid_argument);
  CHECK_THROWS_AS(regularize(g, 16, 8), SizeCapError);
}

TEST_CASE("regularized oracle agrees with the materialized table") {
  const MultiGraph g = corpus_graph(17);
  const RegularizedOracle oracle(g, 16);
  const RotationMap table = regularize(g, 16);
  REQUIRE(oracle.vertex_count() == table.n);
  for (std::uint64_t v = 0; v < table.n; ++v)
    for (std::uint32_t i = 0; i < table.d; ++i) CHECK(oracle.rot(v, i, nullptr) == table.rot(v, i));
}

TEST_CASE("transform levels grow by one label per iteration") {
  const RotationMap h = desk_h();
  const MultiGraph g = corpus_graph(5);
  const RotationMap reg = regularize(g, 16);
  const TransformParams params = small_params(3);
  const auto levels = transform_iterates(reg, h, params, 1ULL << 26);
  REQUIRE(levels.size() == 4);
  for (std::uint32_t i = 0; i <= 3; ++i) {
    std::uint64_t expect = reg.n;
    for (std::uint32_t j = 0; j < i; ++j) expect *= 16;
    CHECK(levels[i].n == expect);
    CHECK(levels[i].d == 16);
    CHECK(validate_rotation_map(levels[i]).valid);
  }
  const RotationMap last = materialize_transform(reg, h, params, 1ULL << 26);
  CHECK(last.table == levels[3].table);
}

TEST_CASE("transform step rejects mismatched factors") {
  const RotationMap h = desk_h();
  const MultiGraph g = corpus_graph(3);
  const RotationMap reg = regularize(g, 4);  // degree 4, but h lives on 16
  CHECK_THROWS_AS(transform_step(reg, h, 1), std::invalid_argument);
}

TEST_CASE("expanded vertex ids round trip") {
  RandomSource rng(split_seed(kCorpusSeed, 901));
  for (int trial = 0; trial < 200; ++trial) {
    ExpandedVertex v;
    v.base = rng.below(1000);
    const std::uint32_t level = 1 + static_cast<std::uint32_t>(rng.below(4));
    for (std::uint32_t j = 0; j < level; ++j)
      v.labels.push_back(static_cast<std::uint32_t>(rng.below(16)));
    const std::uint64_t id = encode_expanded(v, 16);
    const ExpandedVertex back = decode_expanded(id, level, 16);
    CHECK(back.base == v.base);
    CHECK(back.labels == v.labels);
  }
  // Packing is base-first.
  ExpandedVertex v;
  v.base = 3;
  v.labels = {5, 9};
  CHECK(encode_expanded(v, 16) == (3 * 16 + 5) * 16 + 9);
}

TEST_CASE("lazy transform oracle matches materialized tables exactly") {
  const RotationMap h = desk_h();
  for (std::uint32_t idx : {1u, 6u, 23u}) {
    const MultiGraph g = corpus_graph(idx);
    if (g.n > 4) continue;
    const RegularizedOracle base(g, 16);
    const RotationMap reg = regularize(g, 16);
    for (std::uint32_t l = 1; l <= 2; ++l) {
      const TransformParams params = small_params(l);
      const TransformOracle lazy(base, h, params);
      const RotationMap full = materialize_transform(reg, h, params, 1ULL << 26);
      REQUIRE(lazy.vertex_count() == full.n);
      REQUIRE(lazy.degree() == full.d);
      for (std::uint64_t v = 0; v < full.n; ++v)
        for (std::uint32_t i = 0; i < full.d; ++i) CHECK(lazy.rot(v, i, nullptr) == full.rot(v, i));
    }
  }
}

TEST_CASE("lazy oracle is an involution at depth six") {
  const RotationMap h = desk_h();
  const MultiGraph g = corpus_graph(14);
  const RegularizedOracle base(g, 16);
  const TransformParams params = small_params(6);
  const TransformOracle lazy(base, h, params);
  CHECK(lazy.scratch_words() == 8);
  const std::uint64_t n = lazy.vertex_count();
  RandomSource rng(split_seed(kCorpusSeed, 902));
  for (int q = 0; q < 10000; ++q) {
    const std::uint64_t v = rng.below(n);
    const std::uint32_t i = static_cast<std::uint32_t>(rng.below(16));
    const auto [w, j] = lazy.rot(v, i, nullptr);
    CHECK(w < n);
    CHECK(j < 16);
    CHECK(lazy.rot(w, j, nullptr) == std::pair<std::uint64_t, std::uint32_t>{v, i});
  }
  CHECK(lazy.base_queries() > 0);
  CHECK(lazy.h_queries() > 0);
}

TEST_CASE("lazy oracle rejects shapes it cannot address") {
  const RotationMap h = desk_h();
  const MultiGraph g = corpus_graph(4);  // n = 6
  const RegularizedOracle base(g, 16);
  TransformParams params = small_params(15);
  CHECK_THROWS_AS(TransformOracle(base, h, params), std::invalid_argument);

  const RegularizedOracle coarse(g, 8);
  CHECK_THROWS_AS(TransformOracle(coarse, h, small_params(1)), std::invalid_argument);
}

TEST_CASE("walk-bound trace dominates the measured contraction") {
  const RotationMap h = desk_h();
  for (std::uint32_t idx : {2u, 11u}) {
    const MultiGraph g = corpus_graph(idx);
    if (g.n > 3) continue;
    const RotationMap reg = regularize(g, 16);
    const TransformParams params = small_params(2);
    const auto trace = transform_trace(reg, h, params, 1ULL << 26, 1ULL << 14);
    REQUIRE(trace.size() == 3);
    CHECK(trace[0].bound == doctest::Approx(1.0));
    for (const TraceRow& row : trace) {
      CHECK(row.lambda_abs2 <= row.bound + 1e-7);
      CHECK(row.slack == doctest::Approx(row.bound - row.lambda_abs2));
      CHECK(row.degree == 16);
    }
    for (std::uint32_t i = 0; i < trace.size(); ++i)
      CHECK(trace[i].n_vertices == reg.n * (i == 0 ? 1 : (i == 1 ? 16u : 256u)));
  }
}

TEST_CASE("bound recurrence reaches one half within the prescribed length") {
  const std::uint64_t n_in = 4096, d_in = 16;
  const double lambda0 = 1.0 - 1.0 / (static_cast<double>(d_in) * n_in * n_in);
  const std::uint32_t len = transform_length(n_in, d_in);
  const auto seq = transform_bound_recurrence(lambda0, 0.5, 8, len);
  REQUIRE(seq.size() == len + 1);
  for (std::uint32_t i = 1; i < seq.size(); ++i) CHECK(seq[i] <= seq[i - 1] + 1e-12);
  CHECK(seq.back() <= 0.5);
}

TEST_CASE("transform commutes with restriction to a component block") {
  const RotationMap h = desk_h();
  int done = 0;
  for (std::uint32_t idx = 0; idx < 60 && done < 20; idx += 3) {
    const MultiGraph ga = corpus_graph(idx);
    const MultiGraph gb = corpus_graph(idx + 1);
    const RotationMap a = regularize(ga, 16);
    const RotationMap b = regularize(gb, 16);
    const RotationMap joined = union_rotmaps(a, b);
    RotationMap level_join = joined;
    RotationMap level_a = a;
    for (std::uint32_t i = 1; i <= 2; ++i) {
      level_join = transform_step(level_join, h, 1, 1ULL << 26);
      level_a = transform_step(level_a, h, 1, 1ULL << 26);
      std::vector<std::uint64_t> block(level_a.n);
      for (std::uint64_t v = 0; v < level_a.n; ++v) block[v] = v;
      const RotationMap cut = restrict_to(level_join, block);
      CHECK(cut.table == level_a.table);
    }
    ++done;
  }
  CHECK(done == 20);
}
