#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ustcon/connectivity.hpp"
#include "ustcon/errors.hpp"
#include "ustcon/expanders.hpp"
#include "ustcon/graph_io.hpp"
#include "ustcon/operators.hpp"
#include "ustcon/rng.hpp"
#include "ustcon/spectral.hpp"
#include "ustcon/transform.hpp"

namespace {

using namespace ustcon;

struct CommonOpts {
  std::string input;
  std::string format = "edges";
  std::string out;
  std::uint64_t seed = 7;
  std::uint64_t cap_override = 0;

  std::uint64_t table_cap() const { return cap_override ? cap_override : kDefaultTableCap; }
  std::uint64_t dense_cap() const { return cap_override ? cap_override : kDefaultDenseCap; }
};

RotationMap load_rotation_map(const CommonOpts& io) {
  const std::string text = read_text_file(io.input);
  if (io.format == "rotmap") return parse_rotation_map(text);
  return rotation_from_edges(parse_edge_list(text));
}

MultiGraph load_multigraph(const CommonOpts& io) {
  const std::string text = read_text_file(io.input);
  if (io.format == "rotmap") return multigraph_view(parse_rotation_map(text));
  return parse_edge_list(text);
}

void emit(const CommonOpts& io, const std::string& text) {
  if (io.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(io.out, text);
  }
}

std::uint32_t budget_from_c(double c, std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<std::uint32_t>(std::ceil(c * std::log2(static_cast<double>(n))));
}

void add_common(CLI::App* cmd, CommonOpts& io, bool needs_input) {
  auto* in = cmd->add_option("--input", io.input, "graph file");
  if (needs_input) in->required();
  cmd->add_option("--format", io.format, "input format")
      ->check(CLI::IsMember({"edges", "rotmap"}));
  cmd->add_option("--out", io.out, "output file (default stdout)");
  cmd->add_option("--seed", io.seed, "root RNG seed");
  cmd->add_option("--cap-override", io.cap_override,
                  "replace the dense-matrix and table-size caps");
}

int cmd_spectrum(const CommonOpts& io) {
  const RotationMap r = load_rotation_map(io);
  const auto reports = component_spectra(r, io.dense_cap());
  std::ostringstream csv;
  csv << "component," << spectrum_csv_header() << '\n';
  for (std::size_t i = 0; i + 1 < reports.size(); ++i) {
    csv << i << ',' << spectrum_csv_row(reports[i]) << '\n';
  }
  csv << "all," << spectrum_csv_row(reports.back()) << '\n';
  emit(io, csv.str());
  return 0;
}

int cmd_transform_trace(const CommonOpts& io, TransformParams params, double alpha,
                        std::uint32_t tries) {
  if (params.l < 1) {
    std::cerr << "warning: l clamped to 1\n";
    params.l = 1;
  }
  params.validate();
  const std::uint64_t dk = params.label_radix();
  RotationMap g0;
  if (io.format == "rotmap") {
    g0 = parse_rotation_map(read_text_file(io.input));
  } else {
    g0 = regularize(parse_edge_list(read_text_file(io.input)), dk, io.table_cap());
  }
  const RotationMap h =
      find_expander(dk, params.d, alpha, split_seed(io.seed, 1), tries, io.dense_cap()).first;

  std::ostringstream csv;
  csv << "component," << trace_csv_header() << '\n';
  const ComponentPartition comps = components_of(g0);
  for (std::uint32_t c = 0; c < comps.count(); ++c) {
    const std::vector<std::uint64_t> verts(comps.members[c].begin(), comps.members[c].end());
    const RotationMap sub = restrict_to(g0, verts);
    for (const TraceRow& row : transform_trace(sub, h, params, io.table_cap(), io.dense_cap())) {
      csv << c << ',' << trace_csv_row(row) << '\n';
    }
  }
  emit(io, csv.str());
  return 0;
}

int cmd_connect(const CommonOpts& io, const std::string& method, std::uint32_t s, std::uint32_t t,
                TransformParams params, double alpha, std::uint32_t tries, std::uint32_t iters,
                std::uint32_t budget, double budget_c, bool d_set, bool alpha_set, bool seed_set,
                bool tries_set) {
  const MultiGraph g = load_multigraph(io);
  ConnectivityVerdict verdict;
  if (method == "oracle") {
    verdict = oracle_connect(g, s, t);
  } else if (method == "pathenum") {
    const RotationMap r = load_rotation_map(io);
    const TableOracle oracle(r);
    if (budget == 0) budget = budget_from_c(budget_c, r.n);
    verdict = path_enum_connect(oracle, s, t, budget);
  } else if (method == "reingold") {
    params.validate();
    const std::uint64_t dk = params.label_radix();
    // The defaults reproduce the calibrated inner graph; --seed, --alpha, and
    // --tries each move the search off the calibrated point.
    const RotationMap h = find_expander(dk, params.d, alpha_set ? alpha : 0.9,
                                        seed_set ? split_seed(io.seed, 1) : 1,
                                        tries_set ? tries : 50, io.dense_cap())
                              .first;
    if (budget == 0) budget = reingold_budget(g.n, params.l);
    verdict = reingold_connect(g, s, t, params, h, budget);
  } else {
    const std::uint32_t d_h = d_set ? params.d : 3;
    const double target = alpha_set ? alpha : 0.97;
    const std::vector<double> alphas(iters, target);
    auto found = rv_schedule(4, d_h, alphas, iters, split_seed(io.seed, 2), tries, io.dense_cap());
    std::vector<RotationMap> schedule;
    schedule.reserve(found.size());
    for (auto& item : found) schedule.push_back(std::move(item.first));
    if (budget == 0) budget = rv_budget(g.n);
    verdict = rv_connect(g, s, t, 4, schedule, budget, io.table_cap());
  }
  std::cout << verdict_json(verdict) << '\n';
  return verdict.connected ? 0 : 1;
}

int cmd_bench_space(const CommonOpts& io, TransformParams params, std::uint32_t l_max) {
  params.validate();
  const std::uint64_t dk = params.label_radix();
  MultiGraph g;
  g.n = 2;
  g.edges = {{0, 1}, {0, 0}};
  const RotationMap h =
      find_expander(dk, params.d, 1.0, split_seed(io.seed, 1), 8, io.dense_cap()).first;
  const RegularizedOracle reg(g, dk);

  std::vector<std::pair<std::uint32_t, std::int64_t>> rows;
  for (std::uint32_t l = 1; l <= l_max; ++l) {
    TransformParams pl = params;
    pl.l = l;
    const TransformOracle oracle(reg, h, pl);
    WorkspaceMeter meter;
    RandomSource rng(split_seed(io.seed, 100 + l));
    for (int q = 0; q < 16; ++q) {
      const std::uint64_t v = rng.below(oracle.vertex_count());
      const std::uint32_t i = static_cast<std::uint32_t>(rng.below(oracle.degree()));
      oracle.rot(v, i, &meter);
    }
    rows.push_back({l, meter.peak()});
  }

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double m = static_cast<double>(rows.size());
  for (const auto& [l, peak] : rows) {
    sx += l;
    sy += static_cast<double>(peak);
    sxx += static_cast<double>(l) * l;
    sxy += static_cast<double>(l) * static_cast<double>(peak);
  }
  const double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  const double intercept = (sy - slope * sx) / m;
  double ss_res = 0, ss_tot = 0;
  for (const auto& [l, peak] : rows) {
    const double fit = slope * l + intercept;
    ss_res += (peak - fit) * (peak - fit);
    ss_tot += (peak - sy / m) * (peak - sy / m);
  }
  const double r2 = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;

  std::ostringstream csv;
  csv << "l,peak_words\n";
  for (const auto& [l, peak] : rows) csv << l << ',' << peak << '\n';
  csv << "# fit slope=" << format_double(slope) << " intercept=" << format_double(intercept)
      << " r2=" << format_double(r2) << '\n';
  emit(io, csv.str());
  return 0;
}

int cmd_gen_expander(const CommonOpts& io, std::uint64_t n, std::uint32_t d, double alpha,
                     std::uint32_t tries) {
  const auto [graph, spec] = find_expander(n, d, alpha, io.seed, tries, io.dense_cap());
  write_text_file(io.out, write_rotation_map(graph));
  nlohmann::ordered_json sidecar;
  sidecar["n"] = spec.n;
  sidecar["d"] = spec.d;
  sidecar["alpha"] = spec.alpha;
  sidecar["seed"] = spec.seed;
  sidecar["tries"] = spec.tries;
  write_text_file(io.out + ".json", sidecar.dump(2) + "\n");
  std::cout << sidecar.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic log-space undirected st-connectivity toolkit"};
  app.require_subcommand(1);

  TransformParams params;
  params.l = 6;
  double alpha = 0.95;
  std::uint32_t tries = 200;

  auto* spectrum = app.add_subcommand("spectrum", "eigenvalue report per component");
  CommonOpts spectrum_io;
  add_common(spectrum, spectrum_io, true);

  auto* trace = app.add_subcommand("transform-trace", "per-iteration spectral trace");
  CommonOpts trace_io;
  add_common(trace, trace_io, true);
  TransformParams trace_params;
  double trace_alpha = 0.95;
  std::uint32_t trace_tries = 200;
  trace->add_option("--d", trace_params.d, "inner-graph degree");
  trace->add_option("--k", trace_params.k, "label exponent (degree d^k)");
  trace->add_option("--p", trace_params.p, "powering exponent, k = 2p");
  trace->add_option("--l", trace_params.l, "iteration count");
  trace->add_option("--alpha", trace_alpha, "search target for the inner graph");
  trace->add_option("--tries", trace_tries, "inner-graph search attempts");

  auto* connect = app.add_subcommand("connect", "decide s-t connectivity");
  CommonOpts connect_io;
  add_common(connect, connect_io, true);
  std::string method = "oracle";
  std::uint32_t s = 0, t = 0, iters = 3, budget = 0;
  double budget_c = 2.0;
  connect->add_option("--method", method, "decision procedure")
      ->check(CLI::IsMember({"oracle", "pathenum", "reingold", "rv"}));
  connect->add_option("--s", s, "source vertex")->required();
  connect->add_option("--t", t, "target vertex")->required();
  auto* connect_d = connect->add_option("--d", params.d, "inner-graph degree");
  connect->add_option("--k", params.k, "label exponent");
  connect->add_option("--p", params.p, "powering exponent");
  connect->add_option("--l", params.l, "iteration count");
  auto* connect_alpha = connect->add_option("--alpha", alpha, "inner-graph search target");
  auto* connect_tries = connect->add_option("--tries", tries, "inner-graph search attempts");
  connect->add_option("--iters", iters, "derandomized-squaring iterations");
  connect->add_option("--budget", budget, "path length budget (0 = from --budget-c)");
  connect->add_option("--budget-c", budget_c, "budget multiplier against log2(n)");

  auto* bench = app.add_subcommand("bench-space", "workspace growth of the lazy evaluator");
  CommonOpts bench_io;
  add_common(bench, bench_io, false);
  TransformParams bench_params;
  std::uint32_t l_max = 6;
  bench->add_option("--d", bench_params.d, "inner-graph degree");
  bench->add_option("--k", bench_params.k, "label exponent");
  bench->add_option("--p", bench_params.p, "powering exponent");
  bench->add_option("--l", l_max, "largest iteration count");

  auto* gen = app.add_subcommand("gen-expander", "search for a certified expander");
  CommonOpts gen_io;
  std::uint64_t gen_n = 16;
  std::uint32_t gen_d = 4;
  double gen_alpha = 0.9;
  std::uint32_t gen_tries = 200;
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--d", gen_d, "degree")->required();
  gen->add_option("--alpha", gen_alpha, "certification target");
  gen->add_option("--tries", gen_tries, "search attempts");
  gen->add_option("--seed", gen_io.seed, "root RNG seed");
  gen->add_option("--cap-override", gen_io.cap_override, "replace the size caps");
  gen->add_option("--out", gen_io.out, "output rotation-map file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_io);
    if (trace->parsed()) {
      return cmd_transform_trace(trace_io, trace_params, trace_alpha, trace_tries);
    }
    if (connect->parsed()) {
      return cmd_connect(connect_io, method, s, t, params, alpha, tries, iters, budget, budget_c,
                         connect_d->count() > 0, connect_alpha->count() > 0,
                         connect->get_option("--seed")->count() > 0, connect_tries->count() > 0);
    }
    if (bench->parsed()) return cmd_bench_space(bench_io, bench_params, l_max);
    if (gen->parsed()) return cmd_gen_expander(gen_io, gen_n, gen_d, gen_alpha, gen_tries);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
