#include "ustcon/expanders.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "ustcon/errors.hpp"
#include "ustcon/rng.hpp"

namespace ustcon {

RotationMap random_regular(std::uint64_t n, std::uint32_t d, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_regular: need at least one vertex");
  if (d < 1) throw std::invalid_argument("random_regular: need degree >= 1");
  if (n % 2 == 1 && d % 2 == 1) {
    throw std::invalid_argument("random_regular: n*d must be even");
  }
  RandomSource rng(seed);
  RotationMap r;
  r.n = n;
  r.d = d;
  r.table.assign(r.slots(), 0);

  std::vector<std::uint64_t> perm(n);
  for (std::uint32_t t = 0; 2 * t + 1 < d; ++t) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (std::uint64_t v = 0; v < n; ++v) {
      r.table[v * d + 2 * t] = perm[v] * d + (2 * t + 1);
      r.table[perm[v] * d + 2 * t + 1] = v * d + 2 * t;
    }
  }
  if (d % 2 == 1) {
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    for (std::uint64_t i = 0; i < n; i += 2) {
      const std::uint64_t a = perm[i];
      const std::uint64_t b = perm[i + 1];
      r.table[a * d + (d - 1)] = b * d + (d - 1);
      r.table[b * d + (d - 1)] = a * d + (d - 1);
    }
  }
  return r;
}

std::pair<RotationMap, ExpanderSpec> find_expander(std::uint64_t n, std::uint32_t d, double alpha,
                                                   std::uint64_t seed, std::uint32_t max_tries,
                                                   std::uint64_t dense_cap) {
  if (max_tries < 1) throw std::invalid_argument("find_expander: need max_tries >= 1");
  double best = 2.0;
  for (std::uint32_t t = 0; t < max_tries; ++t) {
    RotationMap g = random_regular(n, d, split_seed(seed, t));
    const double measured = spectrum_of(g, dense_cap).lambda_abs2;
    if (measured <= alpha) {
      ExpanderSpec spec;
      spec.n = n;
      spec.d = d;
      spec.alpha = measured;
      spec.seed = seed;
      spec.tries = t + 1;
      return {std::move(g), spec};
    }
    if (measured < best) best = measured;
  }
  throw SearchFailure("find_expander: no " + std::to_string(n) + "-vertex " + std::to_string(d) +
                          "-regular graph with lambda_abs2 <= " + format_double(alpha) + " in " +
                          std::to_string(max_tries) + " tries; best " + format_double(best),
                      best);
}

RotationMap cayley_f2m(std::uint32_t m, const std::vector<std::uint64_t>& generators,
                       std::uint64_t table_cap) {
  if (m < 1 || m > 62) throw std::invalid_argument("cayley_f2m: m out of range");
  if (generators.empty()) throw std::invalid_argument("cayley_f2m: need at least one generator");
  for (const std::uint64_t g : generators) {
    if (m < 64 && (g >> m) != 0) {
      throw std::invalid_argument("cayley_f2m: generator bit-length mismatch");
    }
  }
  const std::uint64_t n = 1ULL << m;
  const std::uint32_t d = static_cast<std::uint32_t>(generators.size());
  if (n > table_cap / d) {
    throw SizeCapError("cayley_f2m table of " + std::to_string(n) + "x" + std::to_string(d) +
                       " slots exceeds cap " + std::to_string(table_cap));
  }
  RotationMap r;
  r.n = n;
  r.d = d;
  r.table.assign(r.slots(), 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (std::uint32_t i = 0; i < d; ++i) {
      r.table[v * d + i] = (v ^ generators[i]) * d + i;
    }
  }
  return r;
}

}  // namespace ustcon
