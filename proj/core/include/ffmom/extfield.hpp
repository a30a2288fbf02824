#pragma once

#include <cstdint>
#include <vector>

#include "ffmom/poly.hpp"

namespace ffmom {

/*
 * F_{q^r} realized as F_q[t]/(m_r) with m_r the first monic irreducible of
 * degree r in enumeration order.  Elements are indices in [0, q^r) whose
 * base-q digits are the coefficients.  Sized for exhaustive sweeps (the
 * quadratic-character table is materialized up front).
 */
class ExtField {
 public:
  ExtField(const Fq& F, int r);

  const Fq& base() const { return F_; }
  int r() const { return r_; }
  const Poly& modulus() const { return modulus_; }
  uint64_t size() const { return size_; }

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t mul(uint64_t a, uint64_t b) const;

  /* quadratic character: +1 on nonzero squares, -1 otherwise, 0 at 0 */
  int eta(uint64_t a) const { return eta_[a]; }

  /* Horner evaluation at x of a polynomial with base-field coefficients */
  uint64_t eval_poly(const Poly& D, uint64_t x) const;

 private:
  void decode(uint64_t a, int32_t* out) const;
  uint64_t encode(const int32_t* c) const;

  const Fq& F_;
  int r_;
  Poly modulus_;
  uint64_t size_;
  std::vector<int8_t> eta_;
};

}  // namespace ffmom
