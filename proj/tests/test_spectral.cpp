#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "support.hpp"
#include "ustcon/errors.hpp"
#include "ustcon/rotation_map.hpp"
#include "ustcon/spectral.hpp"

using namespace ustcon;
using namespace ustcon::testing;

namespace {
constexpr double kPi = 3.14159265358979323846;

RotationMap k4() {
  MultiGraph g;
  g.n = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return rotation_from_edges(g);
}
}  // namespace

TEST_CASE("cycle spectra match the cosine closed form") {
  for (std::uint64_t n : {3ULL, 4ULL, 5ULL, 8ULL, 13ULL}) {
    const auto rep = spectrum_of(cycle_rotmap(n));
    CHECK(rep.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
    double second = -1.0, least = 1.0, abs2 = 0.0;
    for (std::uint64_t kk = 1; kk < n; ++kk) {
      const double ev = std::cos(2.0 * kPi * double(kk) / double(n));
      second = std::max(second, ev);
      least = std::min(least, ev);
      abs2 = std::max(abs2, std::abs(ev));
    }
    CHECK(rep.lambda2_signed == doctest::Approx(second).epsilon(1e-9));
    CHECK(rep.lambda_min == doctest::Approx(least).epsilon(1e-9));
    CHECK(rep.lambda_abs2 == doctest::Approx(abs2).epsilon(1e-9));
    CHECK(rep.connected);
    CHECK(rep.bipartite == (n % 2 == 0));
  }
}

TEST_CASE("complete graph and loop-completed graph endpoints") {
  const auto k4rep = spectrum_of(k4());
  CHECK(k4rep.lambda2_signed == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(k4rep.lambda_min == doctest::Approx(-1.0 / 3.0).epsilon(1e-12));
  CHECK(k4rep.lambda_abs2 == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(k4rep.bipartite);

  // All-ones adjacency: every nontrivial eigenvalue vanishes.
  const auto krep = spectrum_of(complete_with_loops(6));
  CHECK(krep.lambda_abs2 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(krep.gap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disconnection shows as a repeated top eigenvalue") {
  const RotationMap two = union_rotmaps(cycle_rotmap(3), cycle_rotmap(5));
  const auto rep = spectrum_of(two);
  CHECK_FALSE(rep.connected);
  CHECK(rep.lambda1 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.lambda2_signed == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.gap == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("bipartite if and only if minus one is an eigenvalue") {
  const auto even = spectrum_of(cycle_rotmap(6));
  CHECK(even.bipartite);
  CHECK(even.lambda_min == doctest::Approx(-1.0).epsilon(1e-12));

  const auto odd = spectrum_of(cycle_rotmap(7));
  CHECK_FALSE(odd.bipartite);
  CHECK(odd.lambda_min > -1.0 + 1e-6);
}

TEST_CASE("single vertex reporting convention") {
  const auto rep = spectrum_of(complete_with_loops(1));
  CHECK(rep.n == 1);
  CHECK(rep.lambda1 == doctest::Approx(1.0));
  CHECK(rep.lambda2_signed == 0.0);
  CHECK(rep.lambda_abs2 == 0.0);
  CHECK(rep.connected);
}

TEST_CASE("per-component reports precede the whole-graph row") {
  const RotationMap two = union_rotmaps(cycle_rotmap(4), cycle_rotmap(3));
  const auto reps = component_spectra(two);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].n == 4);
  CHECK(reps[0].bipartite);
  CHECK(reps[1].n == 3);
  CHECK_FALSE(reps[1].bipartite);
  CHECK(reps[2].n == 7);
  CHECK_FALSE(reps[2].connected);
  CHECK(reps[0].connected);
  CHECK(reps[1].connected);
}

TEST_CASE("spectral-gap floor holds on connected non-bipartite components") {
  const auto checks = check_alon_bound(cycle_rotmap(9));
  REQUIRE(checks.size() == 1);
  CHECK_FALSE(checks[0].skipped);
  CHECK(checks[0].pass);
  CHECK(checks[0].bound == doctest::Approx(1.0 - 1.0 / (2.0 * 81.0)).epsilon(1e-12));
  CHECK(checks[0].measured <= checks[0].bound);

  // Bipartite pieces are skipped rather than failed.
  const auto skipped = check_alon_bound(cycle_rotmap(8));
  REQUIRE(skipped.size() == 1);
  CHECK(skipped[0].skipped);

  const RotationMap two = union_rotmaps(cycle_rotmap(4), cycle_rotmap(3));
  const auto mixed = check_alon_bound(two);
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].skipped);
  CHECK_FALSE(mixed[1].skipped);
  CHECK(mixed[1].pass);
}

TEST_CASE("dense eigensolves obey the size cap") {
  CHECK_THROWS_AS(spectrum_of(cycle_rotmap(10), 8), SizeCapError);
  CHECK_NOTHROW(spectrum_of(cycle_rotmap(10), 10));
}

TEST_CASE("csv rows are stable and header-aligned") {
  CHECK(spectrum_csv_header() ==
        "n,d,lambda1,lambda2_signed,lambda_min,lambda_abs2,gap,connected,bipartite");
  const auto rep = spectrum_of(cycle_rotmap(4));
  const std::string row = spectrum_csv_row(rep);
  CHECK(row.find("4,2,1,") == 0);
  CHECK(row.find("true") != std::string::npos);
  // Nine comma-separated fields.
  CHECK(std::count(row.begin(), row.end(), ',') == 8);

  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.0) == "-1");
  CHECK(format_double(0.3090169943749474) == "0.309016994375");
}

TEST_CASE("normalized adjacency is symmetric and row-stochastic") {
  const RotationMap r = k4();
  const auto m = normalized_adjacency(r);
  REQUIRE(m.entries.rows() == 4);
  for (int u = 0; u < 4; ++u) {
    CHECK(m.entries.row(u).sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int v = 0; v < 4; ++v) {
      CHECK(m.entries(u, v) == doctest::Approx(m.entries(v, u)).epsilon(1e-15));
    }
  }
}
