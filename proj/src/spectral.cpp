#include "ustcon/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <Eigen/Dense>

#include "ustcon/errors.hpp"

namespace ustcon {

NormalizedAdjacency normalized_adjacency(const RotationMap& r, std::uint64_t dense_cap) {
  if (r.d == 0) throw std::invalid_argument("normalized adjacency needs degree >= 1");
  if (r.n > dense_cap) {
    throw SizeCapError("dense matrix of " + std::to_string(r.n) + " vertices exceeds cap " +
                       std::to_string(dense_cap));
  }
  NormalizedAdjacency m;
  m.entries = adjacency_matrix(r).cast<double>() / static_cast<double>(r.d);
  return m;
}

SpectrumReport spectrum_report(const NormalizedAdjacency& m, std::uint32_t d,
                               const ComponentPartition& comps,
                               const std::vector<bool>& component_bipartite) {
  const Eigen::Index n = m.entries.rows();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.entries, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw EigensolveError("eigensolver failed to converge on n=" + std::to_string(n));
  }
  const Eigen::VectorXd& ev = solver.eigenvalues();  // ascending

  SpectrumReport rep;
  rep.n = static_cast<std::uint64_t>(n);
  rep.d = d;
  rep.lambda1 = ev(n - 1);
  rep.lambda_min = ev(0);
  if (n >= 2) {
    rep.lambda2_signed = ev(n - 2);
    rep.lambda_abs2 = std::max(std::abs(rep.lambda2_signed), std::abs(rep.lambda_min));
  } else {
    rep.lambda2_signed = 0.0;
    rep.lambda_abs2 = 0.0;
  }
  rep.gap = 1.0 - rep.lambda2_signed;
  rep.connected = comps.count() == 1;
  rep.bipartite = !component_bipartite.empty() &&
                  std::all_of(component_bipartite.begin(), component_bipartite.end(),
                              [](bool b) { return b; });
  return rep;
}

SpectrumReport spectrum_of(const RotationMap& r, std::uint64_t dense_cap) {
  const MultiGraph view = multigraph_view(r);
  const auto comps = connected_components(view);
  const auto flags = bipartite_flags(view, comps);
  return spectrum_report(normalized_adjacency(r, dense_cap), r.d, comps, flags);
}

std::vector<SpectrumReport> component_spectra(const RotationMap& r, std::uint64_t dense_cap) {
  const auto comps = components_of(r);
  std::vector<SpectrumReport> out;
  for (const auto& members : comps.members) {
    std::vector<std::uint64_t> subset(members.begin(), members.end());
    out.push_back(spectrum_of(restrict_to(r, subset), dense_cap));
  }
  out.push_back(spectrum_of(r, dense_cap));
  return out;
}

std::vector<AlonCheck> check_alon_bound(const RotationMap& r, std::uint64_t dense_cap) {
  constexpr double kTol = 1e-9;
  const auto comps = components_of(r);
  std::vector<AlonCheck> out;
  for (std::size_t c = 0; c < comps.count(); ++c) {
    AlonCheck check;
    check.component = static_cast<std::uint32_t>(c);
    check.size = comps.members[c].size();
    std::vector<std::uint64_t> subset(comps.members[c].begin(), comps.members[c].end());
    const RotationMap sub = restrict_to(r, subset);
    if (is_bipartite(multigraph_view(sub))) {
      check.skipped = true;
      check.reason = "bipartite component, second eigenvalue may touch the bound";
      out.push_back(check);
      continue;
    }
    const SpectrumReport rep = spectrum_of(sub, dense_cap);
    const double nn = static_cast<double>(check.size);
    check.bound = 1.0 - 1.0 / (static_cast<double>(r.d) * nn * nn);
    check.measured = rep.lambda2_signed;
    check.pass = check.measured <= check.bound + kTol;
    out.push_back(check);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string spectrum_csv_header() {
  return "n,d,lambda1,lambda2_signed,lambda_min,lambda_abs2,gap,connected,bipartite";
}

std::string spectrum_csv_row(const SpectrumReport& rep) {
  std::ostringstream out;
  out << rep.n << ',' << rep.d << ',' << format_double(rep.lambda1) << ','
      << format_double(rep.lambda2_signed) << ',' << format_double(rep.lambda_min) << ','
      << format_double(rep.lambda_abs2) << ',' << format_double(rep.gap) << ','
      << (rep.connected ? "true" : "false") << ',' << (rep.bipartite ? "true" : "false");
  return out.str();
}

}  // namespace ustcon
