#pragma once

#include <cstdint>
#include <vector>

#include "ffmom/fq.hpp"
#include "ffmom/quadext.hpp"

namespace ffmom {

/*
 * Integer combinations of q-th roots of unity, stored as the count vector
 * c[j] of zeta^j for 0 <= j < q.  Since 1 + zeta + ... + zeta^(q-1) = 0,
 * two vectors represent the same number iff they differ by a constant shift
 * of all entries; canonical() subtracts the minimum entry.
 *
 * Character sums with quadratic characters always reduce further into
 * Q(sqrt(q)): the Gauss relation sum_j eta(j) zeta^j = sqrt(q) (q = 1 mod 4)
 * forces the counts to be constant on residue classes of eta, and
 * reduce_to_quadext() decodes that shape into an exact a + b*sqrt(q),
 * throwing if the vector is not of the required shape.
 */
struct CycloInt {
  std::vector<int64_t> c;

  explicit CycloInt(int64_t q) : c(static_cast<size_t>(q), 0) {}

  int64_t qsize() const { return static_cast<int64_t>(c.size()); }
  void add_root(int32_t exponent, int64_t count) {
    c[static_cast<size_t>(exponent)] += count;
  }
};

CycloInt cyclo_add(const CycloInt& x, const CycloInt& y);
CycloInt cyclo_neg(const CycloInt& x);
CycloInt cyclo_canonical(const CycloInt& x);
bool cyclo_equal(const CycloInt& x, const CycloInt& y);

QuadExt reduce_to_quadext(const Fq& F, const CycloInt& x);

}  // namespace ffmom
