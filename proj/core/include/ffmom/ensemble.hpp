#pragma once

#include <cstdint>

#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

namespace ffmom {

/*
 * The hyperelliptic ensemble H_{2g+1}: monic squarefree polynomials of degree
 * 2g+1, of which there are exactly q^(2g) (q-1).  first_moment accumulates
 * sum over D of L(1/2, chi_D)^k exactly: per-discriminant values are integer
 * pairs at the fixed scale q^(k ceil(g/2)), partial sums are merged in chunk
 * order, so the result is bit-identical for every worker count.
 */
struct MomentResult {
  int64_t q = 0;
  int g = 0;
  unsigned k = 1;
  uint64_t count = 0;      /* discriminants visited; q^(2g) (q-1) */
  QuadExt moment;          /* exact ensemble sum */
  double wall_seconds = 0;
  unsigned threads = 1;
};

MomentResult first_moment(const Fq& F, int g, unsigned k, unsigned threads,
                          uint64_t ceiling = 1000000000ull);

/*
 * Exact dual-side check of the ensemble character sum for a fixed modulus f:
 *   lhs = sum_{D in H_{2g+1}} chi_D(f) by enumeration,
 *   rhs = sum_{C | f^inf, deg C <= g}   sum_{h in M_{2g+1-2 deg C}} chi_f(h)
 *       - q sum_{C | f^inf, deg C <= g-1} sum_{h in M_{2g-1-2 deg C}} chi_f(h),
 * where C runs over monic polynomials whose prime factors all divide f.
 * Only deg C enters, so the C's are counted by a knapsack over the distinct
 * prime degrees of f.
 */
struct FirstpointCheck {
  int64_t lhs = 0;
  int64_t rhs = 0;
  bool equal = false;
};

FirstpointCheck firstpoint_check(const Fq& F, const Poly& f, int g);

}  // namespace ffmom
