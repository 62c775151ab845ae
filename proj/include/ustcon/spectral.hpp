#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "ustcon/rotation_map.hpp"

namespace ustcon {

// Default cap on dense eigensolves.
inline constexpr std::uint64_t kDefaultDenseCap = 4096;

// Real symmetric walk matrix A/d of a d-regular rotation map; rows sum to 1.
struct NormalizedAdjacency {
  Eigen::MatrixXd entries;
};

// Spectral summary of one graph. Eigenvalues are of the normalized adjacency,
// sorted descending. lambda_abs2 = max(|lambda2_signed|, |lambda_min|); for a
// single-vertex graph there is no nontrivial eigenvalue and lambda2_signed and
// lambda_abs2 are both reported as 0.
struct SpectrumReport {
  std::uint64_t n = 0;
  std::uint32_t d = 0;
  double lambda1 = 1.0;
  double lambda2_signed = 0.0;
  double lambda_min = 1.0;
  double lambda_abs2 = 0.0;
  double gap = 1.0;
  bool connected = true;
  bool bipartite = false;
};

NormalizedAdjacency normalized_adjacency(const RotationMap& r, std::uint64_t dense_cap = kDefaultDenseCap);

// Full symmetric eigensolve. Connectivity and bipartiteness come from the
// combinatorial oracles, not from eigenvalue thresholds.
SpectrumReport spectrum_report(const NormalizedAdjacency& m, std::uint32_t d,
                               const ComponentPartition& comps,
                               const std::vector<bool>& component_bipartite);

SpectrumReport spectrum_of(const RotationMap& r, std::uint64_t dense_cap = kDefaultDenseCap);

// Reports for each connected component, in canonical component order,
// followed by the whole-graph report.
std::vector<SpectrumReport> component_spectra(const RotationMap& r,
                                              std::uint64_t dense_cap = kDefaultDenseCap);

// Spectral-gap floor for connected non-bipartite regular graphs:
// lambda2_signed <= 1 - 1/(d * n^2). Bipartite components are skipped.
struct AlonCheck {
  std::uint32_t component = 0;
  std::uint64_t size = 0;
  bool skipped = false;
  std::string reason;
  double bound = 0.0;
  double measured = 0.0;
  bool pass = true;
};

std::vector<AlonCheck> check_alon_bound(const RotationMap& r,
                                        std::uint64_t dense_cap = kDefaultDenseCap);

std::string spectrum_csv_header();
std::string spectrum_csv_row(const SpectrumReport& rep);

// Stable numeric formatting used by every CSV writer.
std::string format_double(double x);

}  // namespace ustcon
