#pragma once

#include <vector>

#include "ffmom/enumerate.hpp"
#include "ffmom/poly.hpp"

namespace ffmom {

struct PrimePower {
  Poly p;
  int e;
};

/*
 * Complete factorization of a monic polynomial into monic irreducibles,
 * sorted by enumeration order of the primes.  The factorization of 1 is the
 * empty list.  product() reconstructs the input exactly.
 */
struct Factorization {
  std::vector<PrimePower> factors;

  int radical_degree() const {
    int d = 0;
    for (const auto& pp : factors) d += pp.p.deg();
    return d;
  }
  bool is_squarefree() const {
    for (const auto& pp : factors)
      if (pp.e > 1) return false;
    return true;
  }
  bool is_square() const {
    for (const auto& pp : factors)
      if (pp.e % 2 != 0) return false;
    return true;
  }
};

Factorization factorize(const Fq& F, const Poly& f);

Poly product(const Fq& F, const Factorization& fac);

}  // namespace ffmom
