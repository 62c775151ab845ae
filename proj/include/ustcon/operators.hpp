#pragma once

#include <cstdint>
#include <string>

#include "ustcon/rotation_map.hpp"
#include "ustcon/spectral.hpp"

namespace ustcon {

// t-th power: one step walks t edges. The label is the walk's label tuple
// (a_1..a_t) packed most-significant-first in base d; the returned label is
// the reversed tuple of return labels (b_t..b_1), same packing, which is what
// makes the map an involution. Adjacency is A^t, walk eigenvalues are powers.
RotationMap power(const RotationMap& g, std::uint32_t t,
                  std::uint64_t table_cap = kDefaultTableCap);

// Zig-zag product. g is D-regular on N vertices, h is d-regular on D vertices
// (h.n == g.d). The result is d^2-regular on N*D vertices; vertex (v, a) is
// packed v*D + a and label (i, j) is packed i*d + j. A step runs h, then g
// through the fresh h-label, then h again, and returns label (j', i').
RotationMap zigzag(const RotationMap& g, const RotationMap& h,
                   std::uint64_t table_cap = kDefaultTableCap);

// Derandomized square: the two-step walks of g with the middle vertex's label
// pair subsampled through h (h.n == g.d). D*d-regular on g's vertex set;
// label (x, a) is packed x*d + a.
RotationMap derand_square(const RotationMap& g, const RotationMap& h,
                          std::uint64_t table_cap = kDefaultTableCap);

// Spectral bound for the zig-zag product:
//   f(lambda, alpha) = (1-alpha^2)/2 * lambda + sqrt(((1-alpha^2)/2 * lambda)^2 + alpha^2)
// with f(lambda, 0) = lambda, f(0, alpha) = alpha, f(1, alpha) = 1.
// Arguments outside [0, 1] are a domain error.
double zigzag_lambda_bound(double lambda, double alpha);

// Spectral bound for the derandomized square: 1 - (1-lambda^2)(1-alpha).
double derand_square_lambda_bound(double lambda, double alpha);

// Looser form lambda^2 + alpha, handy for quick estimates.
double derand_square_loose_bound(double lambda, double alpha);

// One certified instance of an operator bound.
struct BoundReport {
  std::string op;
  double lambda_in = 0.0;
  double alpha_in = 0.0;
  double bound = 0.0;
  double measured = 0.0;
  double slack = 0.0;  // bound - measured
};

BoundReport certify_zigzag(const RotationMap& g, const RotationMap& h,
                           std::uint64_t dense_cap = kDefaultDenseCap,
                           std::uint64_t table_cap = kDefaultTableCap);
BoundReport certify_derand_square(const RotationMap& g, const RotationMap& h,
                                  std::uint64_t dense_cap = kDefaultDenseCap,
                                  std::uint64_t table_cap = kDefaultTableCap);

std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& rep);

}  // namespace ustcon
