#include "ustcon/connectivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ustcon/operators.hpp"
#include "ustcon/rng.hpp"

namespace ustcon {

ConnectivityVerdict path_enum_connect(const RotationOracle& r, std::uint64_t s,
                                      const std::function<bool(std::uint64_t)>& accept,
                                      std::uint32_t budget) {
  const std::uint64_t n = r.vertex_count();
  if (s >= n) throw std::invalid_argument("path_enum_connect: vertex out of range");
  ConnectivityVerdict v;
  v.method = "pathenum";
  v.path_len_budget = budget;
  if (accept(s)) {
    v.connected = true;
    return v;
  }

  WorkspaceMeter meter;
  const std::uint32_t d = r.degree();
  std::vector<std::uint32_t> fwd(budget), back(budget);
  MeterCharge stacks(&meter, 2 * static_cast<std::int64_t>(budget) + 2);
  std::uint64_t cur = s;
  std::uint32_t depth = 0;
  std::uint32_t next = 0;
  bool found = false;
  while (!found) {
    if (depth < budget && next < d) {
      const auto [w, j] = r.rot(cur, next, &meter);
      ++v.queries;
      if (accept(w)) {
        found = true;
        break;
      }
      fwd[depth] = next;
      back[depth] = j;
      cur = w;
      ++depth;
      next = 0;
    } else if (depth > 0) {
      --depth;
      cur = r.rot(cur, back[depth], &meter).first;
      ++v.queries;
      next = fwd[depth] + 1;
    } else {
      break;
    }
  }
  v.connected = found;
  v.peak_words = meter.peak();
  return v;
}

ConnectivityVerdict path_enum_connect(const RotationOracle& r, std::uint64_t s, std::uint64_t t,
                                      std::uint32_t budget) {
  if (t >= r.vertex_count()) {
    throw std::invalid_argument("path_enum_connect: vertex out of range");
  }
  return path_enum_connect(r, s, [t](std::uint64_t w) { return w == t; }, budget);
}

namespace {

// Base-oracle wrapper recording whether any queried vertex falls in one cloud
// of the regularized layout. Every base query made during lazy evaluation
// extends a real walk of the regularized graph from the enumeration's start,
// so a recorded touch is a sound connectivity witness.
class CloudWatch : public RotationOracle {
 public:
  CloudWatch(const RotationOracle& inner, std::uint64_t n, std::uint64_t cloud)
      : inner_(&inner), n_(n), cloud_(cloud) {}
  std::uint64_t vertex_count() const override { return inner_->vertex_count(); }
  std::uint32_t degree() const override { return inner_->degree(); }
  std::pair<std::uint64_t, std::uint32_t> rot(std::uint64_t v, std::uint32_t i,
                                              WorkspaceMeter* meter) const override {
    const auto r = inner_->rot(v, i, meter);
    if (r.first / n_ == cloud_) seen_ = true;
    return r;
  }
  bool seen() const { return seen_; }

 private:
  const RotationOracle* inner_;
  std::uint64_t n_;
  std::uint64_t cloud_;
  mutable bool seen_ = false;
};

// One direction of the decider: enumerate level-l paths from the canonical
// copy of s, accepting when the projected base walk enters the cloud of t.
ConnectivityVerdict cloud_search(const MultiGraph& g, std::uint32_t s, std::uint32_t t,
                                 const TransformParams& params, const RotationMap& h,
                                 std::uint32_t budget) {
  std::uint64_t dp = 1;
  for (std::uint32_t i = 0; i < params.p; ++i) dp *= params.d;
  const RegularizedOracle reg(g, dp);
  const CloudWatch watch(reg, g.n, t);
  const SquareOracle base(watch);
  const TransformOracle expanded(base, h, params);

  std::uint64_t radix_l = 1;
  for (std::uint32_t i = 0; i < params.l; ++i) radix_l *= params.label_radix();
  const std::uint64_t s_id = (static_cast<std::uint64_t>(s) * g.n) * radix_l;
  const std::uint64_t n_base = g.n;
  const std::uint64_t cloud = t;
  return path_enum_connect(
      expanded, s_id,
      [&watch, radix_l, n_base, cloud](std::uint64_t w) {
        return watch.seen() || (w / radix_l) / n_base == cloud;
      },
      budget);
}

}  // namespace

ConnectivityVerdict reingold_connect(const MultiGraph& g, std::uint32_t s, std::uint32_t t,
                                     const TransformParams& params, const RotationMap& h,
                                     std::uint32_t budget) {
  if (s >= g.n || t >= g.n) throw std::invalid_argument("reingold_connect: vertex out of range");
  params.validate();
  ConnectivityVerdict v = cloud_search(g, s, t, params, h, budget);
  if (!v.connected) {
    const ConnectivityVerdict back = cloud_search(g, t, s, params, h, budget);
    v.connected = back.connected;
    v.queries += back.queries;
    v.peak_words = std::max(v.peak_words, back.peak_words);
  }
  v.method = "reingold";
  return v;
}

std::uint32_t reingold_budget(std::uint64_t n, std::uint32_t l) {
  // One level-l step drives 2^l base steps of the projected walk, but path
  // enumeration can steer only a fraction of them along a shortest route, so
  // the coverage constant absorbs that overhead on top of the log2(n)
  // distance scale. 48 reproduces the measured corpus budgets at l = 6.
  constexpr double c_reg = 48.0;
  if (n < 2) return 1;
  const double amplification = std::pow(2.0, std::min<std::uint32_t>(l, 40));
  const double need = c_reg * std::log2(static_cast<double>(n)) / amplification;
  return static_cast<std::uint32_t>(std::max(1.0, std::ceil(need)));
}

std::uint32_t rv_budget(std::uint64_t n) {
  if (n < 2) return 1;
  const double need = std::ceil(std::log2(static_cast<double>(n)));
  return static_cast<std::uint32_t>(need) + 1;
}

std::vector<std::pair<RotationMap, ExpanderSpec>> rv_schedule(std::uint32_t base_degree,
                                                              std::uint32_t d,
                                                              const std::vector<double>& alphas,
                                                              std::uint32_t iters,
                                                              std::uint64_t seed,
                                                              std::uint32_t max_tries,
                                                              std::uint64_t dense_cap) {
  if (alphas.size() < iters) {
    throw std::invalid_argument("rv_schedule: alpha schedule shorter than iteration count");
  }
  std::vector<std::pair<RotationMap, ExpanderSpec>> schedule;
  std::uint64_t size = base_degree;
  for (std::uint32_t m = 0; m < iters; ++m) {
    schedule.push_back(
        find_expander(size, d, alphas[m], split_seed(seed, m), max_tries, dense_cap));
    size *= d;
  }
  return schedule;
}

std::vector<RotationMap> rv_pipeline(const MultiGraph& g, std::uint32_t base_degree,
                                     const std::vector<RotationMap>& schedule,
                                     std::uint64_t table_cap) {
  std::vector<RotationMap> levels;
  levels.push_back(regularize(g, base_degree, table_cap));
  for (std::size_t m = 0; m < schedule.size(); ++m) {
    if (schedule[m].n != levels.back().d) {
      throw std::invalid_argument("rv_pipeline: schedule graph " + std::to_string(m) + " has " +
                                  std::to_string(schedule[m].n) + " vertices, need " +
                                  std::to_string(levels.back().d));
    }
    levels.push_back(derand_square(levels.back(), schedule[m], table_cap));
  }
  return levels;
}

ConnectivityVerdict rv_connect(const MultiGraph& g, std::uint32_t s, std::uint32_t t,
                               std::uint32_t base_degree,
                               const std::vector<RotationMap>& schedule, std::uint32_t budget,
                               std::uint64_t table_cap) {
  if (s >= g.n || t >= g.n) throw std::invalid_argument("rv_connect: vertex out of range");
  const auto levels = rv_pipeline(g, base_degree, schedule, table_cap);
  const TableOracle final_graph(levels.back());
  const std::uint64_t s_id = static_cast<std::uint64_t>(s) * g.n;
  const std::uint64_t t_id = static_cast<std::uint64_t>(t) * g.n;
  ConnectivityVerdict v = path_enum_connect(final_graph, s_id, t_id, budget);
  v.method = "rv";
  return v;
}

ConnectivityVerdict oracle_connect(const MultiGraph& g, std::uint32_t s, std::uint32_t t) {
  if (s >= g.n || t >= g.n) throw std::invalid_argument("oracle_connect: vertex out of range");
  ConnectivityVerdict v;
  v.method = "oracle";
  v.connected = connected_components(g).same(s, t);
  return v;
}

std::string verdict_json(const ConnectivityVerdict& v) {
  std::ostringstream out;
  out << "{\"method\":\"" << v.method << "\",\"connected\":" << (v.connected ? "true" : "false")
      << ",\"budget\":" << v.path_len_budget << ",\"queries\":" << v.queries
      << ",\"peak_words\":" << v.peak_words << "}";
  return out.str();
}

}  // namespace ustcon
