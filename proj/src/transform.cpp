#include "ustcon/transform.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "ustcon/errors.hpp"
#include "ustcon/operators.hpp"

namespace ustcon {

void TransformParams::validate() const {
  if (d < 2 || d % 2 != 0) {
    // H is d-regular on d^k vertices; with d odd both factors of the degree
    // sum d * d^k are odd and no such graph exists.
    throw std::invalid_argument("transform: d must be even and >= 2");
  }
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("transform: k must be even and >= 2");
  if (k != 2 * p) throw std::invalid_argument("transform: k = 2p is required for type stability");
  if (l < 1) throw std::invalid_argument("transform: l must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw std::invalid_argument("transform: alpha outside [0, 1]");
  label_radix();
}

std::uint64_t TransformParams::label_radix() const {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    if (r > (1ULL << 31) / d) throw std::invalid_argument("transform: d^k too large");
    r *= d;
  }
  return r;
}

std::uint32_t transform_length(std::uint64_t n_in, std::uint64_t d_in) {
  unsigned __int128 x = static_cast<unsigned __int128>(d_in) * n_in * n_in;
  std::uint32_t ceil_log2 = 0;
  unsigned __int128 v = 1;
  while (v < x) {
    v <<= 1;
    ++ceil_log2;
  }
  const std::uint32_t l = 2 * ceil_log2;
  return l < 1 ? 1 : l;
}

RegularizedOracle::RegularizedOracle(const MultiGraph& g, std::uint64_t dk)
    : n_(g.n), dk_(dk) {
  if (dk_ < 3) throw std::invalid_argument("regularize: need degree >= 3 (cycle pair + crossing)");
  if (n_ < 1) throw std::invalid_argument("regularize: empty vertex set");
  // A dense pair bitmap keeps the crossing test off the rot hot path; fall
  // back to hashing when n^2 bits would be an allocation worth avoiding.
  if (n_ <= kDenseAdjacencyLimit) dense_.assign(n_ * n_, false);
  for (const auto& [u, v] : g.edges) {
    if (!dense_.empty()) {
      dense_[static_cast<std::uint64_t>(u) * n_ + v] = true;
      dense_[static_cast<std::uint64_t>(v) * n_ + u] = true;
    } else {
      adjacent_.insert(static_cast<std::uint64_t>(u) * n_ + v);
      adjacent_.insert(static_cast<std::uint64_t>(v) * n_ + u);
    }
  }
}

std::pair<std::uint64_t, std::uint32_t> RegularizedOracle::rot(std::uint64_t v, std::uint32_t i,
                                                               WorkspaceMeter* meter) const {
  MeterCharge registers(meter, 4);
  const std::uint64_t a = v / n_;
  const std::uint64_t b = v % n_;
  switch (i) {
    case 0:
      return {a * n_ + (b + 1) % n_, 1};
    case 1:
      return {a * n_ + (b + n_ - 1) % n_, 0};
    case 2: {
      const std::uint64_t key = a * n_ + b;
      const bool crossing = dense_.empty() ? adjacent_.count(key) > 0 : dense_[key];
      if (crossing) return {b * n_ + a, 2};
      return {v, 2};
    }
    default:
      return {v, i};
  }
}

RotationMap regularize(const MultiGraph& g, std::uint64_t dk, std::uint64_t table_cap) {
  const RegularizedOracle oracle(g, dk);
  const std::uint64_t n = oracle.vertex_count();
  if (n > table_cap / dk) {
    throw SizeCapError("regularize table of " + std::to_string(n) + "x" + std::to_string(dk) +
                       " slots exceeds cap " + std::to_string(table_cap));
  }
  RotationMap r;
  r.n = n;
  r.d = static_cast<std::uint32_t>(dk);
  r.table.assign(r.slots(), 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < dk; ++i) {
      const auto [w, j] = oracle.rot(v, i, nullptr);
      r.table[v * dk + i] = w * dk + j;
    }
  }
  return r;
}

RotationMap transform_step(const RotationMap& g_prev, const RotationMap& h, std::uint32_t p,
                           std::uint64_t table_cap) {
  return power(zigzag(g_prev, h, table_cap), p, table_cap);
}

std::vector<RotationMap> transform_iterates(const RotationMap& g_reg, const RotationMap& h,
                                            const TransformParams& params,
                                            std::uint64_t table_cap) {
  params.validate();
  const std::uint64_t dk = params.label_radix();
  if (g_reg.d != dk) {
    throw std::invalid_argument("transform: input degree " + std::to_string(g_reg.d) +
                                " != d^k = " + std::to_string(dk));
  }
  if (h.n != dk || h.d != params.d) {
    throw std::invalid_argument("transform: h must be d-regular on d^k vertices");
  }
  std::vector<RotationMap> levels;
  levels.push_back(g_reg);
  for (std::uint32_t i = 1; i <= params.l; ++i) {
    levels.push_back(transform_step(levels.back(), h, params.p, table_cap));
  }
  return levels;
}

RotationMap materialize_transform(const RotationMap& g_reg, const RotationMap& h,
                                  const TransformParams& params, std::uint64_t table_cap) {
  auto levels = transform_iterates(g_reg, h, params, table_cap);
  return std::move(levels.back());
}

std::uint64_t encode_expanded(const ExpandedVertex& v, std::uint64_t dk) {
  std::uint64_t id = v.base;
  for (std::uint32_t lab : v.labels) id = id * dk + lab;
  return id;
}

ExpandedVertex decode_expanded(std::uint64_t id, std::uint32_t level, std::uint64_t dk) {
  ExpandedVertex v;
  v.labels.assign(level, 0);
  for (std::uint32_t i = level; i > 0; --i) {
    v.labels[i - 1] = static_cast<std::uint32_t>(id % dk);
    id /= dk;
  }
  v.base = id;
  return v;
}

TransformOracle::TransformOracle(const RotationOracle& g0, const RotationMap& h,
                                 const TransformParams& params)
    : g0_(&g0), h_(&h), params_(params) {
  params_.validate();
  dk_ = params_.label_radix();
  if (g0.degree() != dk_) {
    throw std::invalid_argument("transform oracle: base degree must equal d^k");
  }
  if (h.n != dk_ || h.d != params_.d) {
    throw std::invalid_argument("transform oracle: h must be d-regular on d^k vertices");
  }
  pow_d_.assign(params_.k + 1, 1);
  for (std::uint32_t i = 1; i <= params_.k; ++i) pow_d_[i] = pow_d_[i - 1] * params_.d;
  // The packed vertex id must fit 64 bits.
  std::uint64_t count = g0.vertex_count();
  for (std::uint32_t i = 0; i < params_.l; ++i) {
    if (count > UINT64_MAX / dk_) {
      throw std::invalid_argument("transform oracle: vertex ids overflow 64 bits at this l");
    }
    count *= dk_;
  }
}

std::uint64_t TransformOracle::vertex_count() const {
  std::uint64_t count = g0_->vertex_count();
  for (std::uint32_t i = 0; i < params_.l; ++i) count *= dk_;
  return count;
}

std::uint32_t TransformOracle::digit_at(std::uint32_t label, std::uint32_t pos) const {
  return label / pow_d_[params_.k - pos] % params_.d;
}

std::uint32_t TransformOracle::with_digit(std::uint32_t label, std::uint32_t pos,
                                          std::uint32_t digit) const {
  const std::uint32_t weight = pow_d_[params_.k - pos];
  const std::uint32_t old = label / weight % params_.d;
  return label + (digit - old) * weight;
}

std::uint32_t TransformOracle::reverse_digits(std::uint32_t label) const {
  std::uint32_t out = 0;
  for (std::uint32_t pos = 0; pos < params_.k; ++pos) {
    out = out * params_.d + label % params_.d;
    label /= params_.d;
  }
  return out;
}

void TransformOracle::eval_level(std::uint32_t level, std::uint64_t& base, std::uint32_t* labels,
                                 WorkspaceMeter* meter) const {
  MeterCharge frame(meter, 2);  // loop index + frame slot
  if (level == 0) {
    ++base_queries_;
    const auto [nb, nl] = g0_->rot(base, labels[0], meter);
    base = nb;
    labels[0] = nl;
    return;
  }
  for (std::uint32_t j = 1; j <= params_.k; ++j) {
    ++h_queries_;
    const auto [na, nd] = h_->rot(labels[level - 1], digit_at(labels[level], j));
    labels[level - 1] = static_cast<std::uint32_t>(na);
    labels[level] = with_digit(labels[level], j, nd);
    if (j % 2 == 1) eval_level(level - 1, base, labels, meter);
  }
  labels[level] = reverse_digits(labels[level]);
}

std::pair<std::uint64_t, std::uint32_t> TransformOracle::rot(std::uint64_t v, std::uint32_t i,
                                                             WorkspaceMeter* meter) const {
  const std::uint32_t l = params_.l;
  // One base register plus l+1 labels of k digits each.
  MeterCharge state(meter, 1 + static_cast<std::int64_t>(l + 1) * params_.k);
  std::vector<std::uint32_t> labels(l + 1);
  std::uint64_t id = v;
  for (std::uint32_t idx = l; idx > 0; --idx) {
    labels[idx - 1] = static_cast<std::uint32_t>(id % dk_);
    id /= dk_;
  }
  std::uint64_t base = id;
  labels[l] = i;

  eval_level(l, base, labels.data(), meter);

  std::uint64_t out = base;
  for (std::uint32_t idx = 0; idx < l; ++idx) out = out * dk_ + labels[idx];
  return {out, labels[l]};
}

std::vector<TraceRow> transform_trace(const RotationMap& g_reg, const RotationMap& h,
                                      const TransformParams& params, std::uint64_t table_cap,
                                      std::uint64_t dense_cap) {
  const auto levels = transform_iterates(g_reg, h, params, table_cap);
  const double alpha = spectrum_of(h, dense_cap).lambda_abs2;
  std::vector<TraceRow> rows;
  double prev = 0.0;
  for (std::uint32_t i = 0; i < levels.size(); ++i) {
    TraceRow row;
    row.iteration = i;
    row.n_vertices = levels[i].n;
    row.degree = levels[i].d;
    row.lambda_abs2 = spectrum_of(levels[i], dense_cap).lambda_abs2;
    if (i == 0) {
      row.bound = 1.0;
    } else {
      double b = zigzag_lambda_bound(prev, alpha);
      double powed = 1.0;
      for (std::uint32_t s = 0; s < params.p; ++s) powed *= b;
      row.bound = powed;
    }
    row.slack = row.bound - row.lambda_abs2;
    prev = row.lambda_abs2;
    rows.push_back(row);
  }
  return rows;
}

std::vector<double> transform_bound_recurrence(double lambda0, double alpha, std::uint32_t p,
                                               std::uint32_t l) {
  std::vector<double> seq{lambda0};
  for (std::uint32_t i = 0; i < l; ++i) {
    double b = zigzag_lambda_bound(seq.back(), alpha);
    double powed = 1.0;
    for (std::uint32_t s = 0; s < p; ++s) powed *= b;
    seq.push_back(powed > 1.0 ? 1.0 : powed);
  }
  return seq;
}

std::string trace_csv_header() { return "iteration,n_vertices,degree,lambda_abs2,bound,slack"; }

std::string trace_csv_row(const TraceRow& row) {
  std::ostringstream out;
  out << row.iteration << ',' << row.n_vertices << ',' << row.degree << ','
      << format_double(row.lambda_abs2) << ',' << format_double(row.bound) << ','
      << format_double(row.slack);
  return out.str();
}

}  // namespace ustcon
