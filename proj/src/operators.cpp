#include "ustcon/operators.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ustcon/errors.hpp"

namespace ustcon {

namespace {

void check_table_cap(std::uint64_t n, std::uint64_t d, std::uint64_t cap, const char* what) {
  if (d != 0 && n > cap / d) {
    throw SizeCapError(std::string(what) + " table of " + std::to_string(n) + "x" +
                       std::to_string(d) + " slots exceeds cap " + std::to_string(cap));
  }
}

void check_mates(const RotationMap& g, const RotationMap& h, const char* what) {
  if (h.n != g.d) {
    throw std::invalid_argument(std::string(what) + ": h must live on g's label set, got h.n=" +
                                std::to_string(h.n) + " vs g.d=" + std::to_string(g.d));
  }
}

void check_unit_interval(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::domain_error(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

RotationMap power(const RotationMap& g, std::uint32_t t, std::uint64_t table_cap) {
  if (t == 0) throw std::invalid_argument("power exponent must be >= 1");
  const std::uint64_t d = g.d;
  std::uint64_t dt = 1;
  for (std::uint32_t s = 0; s < t; ++s) {
    if (d != 0 && dt > table_cap / d) throw SizeCapError("power degree d^t overflows table cap");
    dt *= d;
  }
  check_table_cap(g.n, dt, table_cap, "power");

  RotationMap out;
  out.n = g.n;
  out.d = static_cast<std::uint32_t>(dt);
  out.table.assign(out.slots(), 0);
  for (std::uint64_t v0 = 0; v0 < g.n; ++v0) {
    for (std::uint64_t lab = 0; lab < dt; ++lab) {
      std::uint64_t v = v0;
      std::uint64_t back = 0;   // (b_t .. b_1) packed, b_1 least significant
      std::uint64_t scale = 1;
      std::uint64_t rest = lab;
      std::uint64_t msd = dt / d;  // weight of a_1
      for (std::uint32_t s = 0; s < t; ++s) {
        const std::uint32_t a = static_cast<std::uint32_t>(rest / msd);
        rest %= msd;
        msd = (msd == 1) ? 1 : msd / d;
        const auto [w, b] = g.rot(v, a);
        v = w;
        back += static_cast<std::uint64_t>(b) * scale;
        scale *= d;
      }
      out.table[v0 * dt + lab] = v * dt + back;
    }
  }
  return out;
}

RotationMap zigzag(const RotationMap& g, const RotationMap& h, std::uint64_t table_cap) {
  check_mates(g, h, "zigzag");
  const std::uint64_t big_d = g.d;
  const std::uint64_t d = h.d;
  const std::uint64_t n_out = g.n * big_d;
  const std::uint64_t d_out = d * d;
  check_table_cap(n_out, d_out, table_cap, "zigzag");

  RotationMap out;
  out.n = n_out;
  out.d = static_cast<std::uint32_t>(d_out);
  out.table.assign(out.slots(), 0);
  for (std::uint64_t v = 0; v < g.n; ++v) {
    for (std::uint64_t a = 0; a < big_d; ++a) {
      for (std::uint32_t i = 0; i < d; ++i) {
        for (std::uint32_t j = 0; j < d; ++j) {
          const auto [ap, ip] = h.rot(a, i);
          const auto [w, bp] = g.rot(v, static_cast<std::uint32_t>(ap));
          const auto [b, jp] = h.rot(bp, j);
          const std::uint64_t src = (v * big_d + a) * d_out + i * d + j;
          const std::uint64_t dst = (w * big_d + b) * d_out + jp * d + ip;
          out.table[src] = dst;
        }
      }
    }
  }
  return out;
}

RotationMap derand_square(const RotationMap& g, const RotationMap& h, std::uint64_t table_cap) {
  check_mates(g, h, "derand_square");
  const std::uint64_t big_d = g.d;
  const std::uint64_t d = h.d;
  const std::uint64_t d_out = big_d * d;
  check_table_cap(g.n, d_out, table_cap, "derand_square");

  RotationMap out;
  out.n = g.n;
  out.d = static_cast<std::uint32_t>(d_out);
  out.table.assign(out.slots(), 0);
  for (std::uint64_t v = 0; v < g.n; ++v) {
    for (std::uint32_t x = 0; x < big_d; ++x) {
      for (std::uint32_t a = 0; a < d; ++a) {
        const auto [u, y] = g.rot(v, x);
        const auto [z, b] = h.rot(y, a);
        const auto [w, hh] = g.rot(u, static_cast<std::uint32_t>(z));
        const std::uint64_t src = v * d_out + static_cast<std::uint64_t>(x) * d + a;
        const std::uint64_t dst = w * d_out + static_cast<std::uint64_t>(hh) * d + b;
        out.table[src] = dst;
      }
    }
  }
  return out;
}

double zigzag_lambda_bound(double lambda, double alpha) {
  check_unit_interval(lambda, "lambda");
  check_unit_interval(alpha, "alpha");
  const double half = 0.5 * (1.0 - alpha * alpha) * lambda;
  return half + std::sqrt(half * half + alpha * alpha);
}

double derand_square_lambda_bound(double lambda, double alpha) {
  check_unit_interval(lambda, "lambda");
  check_unit_interval(alpha, "alpha");
  return 1.0 - (1.0 - lambda * lambda) * (1.0 - alpha);
}

double derand_square_loose_bound(double lambda, double alpha) {
  check_unit_interval(lambda, "lambda");
  check_unit_interval(alpha, "alpha");
  return lambda * lambda + alpha;
}

BoundReport certify_zigzag(const RotationMap& g, const RotationMap& h, std::uint64_t dense_cap,
                           std::uint64_t table_cap) {
  BoundReport rep;
  rep.op = "zigzag";
  rep.lambda_in = spectrum_of(g, dense_cap).lambda_abs2;
  rep.alpha_in = spectrum_of(h, dense_cap).lambda_abs2;
  rep.bound = zigzag_lambda_bound(rep.lambda_in, rep.alpha_in);
  rep.measured = spectrum_of(zigzag(g, h, table_cap), dense_cap).lambda_abs2;
  rep.slack = rep.bound - rep.measured;
  return rep;
}

BoundReport certify_derand_square(const RotationMap& g, const RotationMap& h,
                                  std::uint64_t dense_cap, std::uint64_t table_cap) {
  BoundReport rep;
  rep.op = "derand_square";
  rep.lambda_in = spectrum_of(g, dense_cap).lambda_abs2;
  rep.alpha_in = spectrum_of(h, dense_cap).lambda_abs2;
  rep.bound = derand_square_lambda_bound(rep.lambda_in, rep.alpha_in);
  rep.measured = spectrum_of(derand_square(g, h, table_cap), dense_cap).lambda_abs2;
  rep.slack = rep.bound - rep.measured;
  return rep;
}

std::string bound_csv_header() { return "operator,lambda_in,alpha_in,bound,measured,slack"; }

std::string bound_csv_row(const BoundReport& rep) {
  std::ostringstream out;
  out << rep.op << ',' << format_double(rep.lambda_in) << ',' << format_double(rep.alpha_in) << ','
      << format_double(rep.bound) << ',' << format_double(rep.measured) << ','
      << format_double(rep.slack);
  return out.str();
}

}  // namespace ustcon
