#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ffmom/fq.hpp"

namespace ffmom {

/*
 * Dense polynomials over F_q, coefficients lowest-degree first in canonical
 * residues.  Invariant: no trailing zero coefficient, so the zero polynomial
 * is the empty vector and deg() reports -1 as its degree marker.
 *
 * Text format: comma-separated decimal coefficients, lowest first, e.g.
 * "1,0,3" is 3x^2 + 1.  to_string() emits canonical residues and round-trips
 * bit-exactly through from_string().
 */
class Poly {
 public:
  Poly() = default;

  static Poly zero() { return Poly(); }
  static Poly one() { return constant(1); }
  static Poly x() { return Poly(std::vector<int32_t>{0, 1}); }
  static Poly constant(int32_t c) {
    Poly p;
    if (c != 0) p.c_.push_back(c);
    return p;
  }
  /* reduces arbitrary integer coefficients into F_q and trims */
  static Poly from_coeffs(const Fq& F, const std::vector<int64_t>& coeffs);

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  int32_t coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)] : 0;
  }
  int32_t lead() const { return c_.back(); }
  const std::vector<int32_t>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return c_ != o.c_; }
  /* degree first, then coefficients from the top down; total order */
  bool operator<(const Poly& o) const;

  /* raw constructor trusts the no-trailing-zero invariant */
  static Poly from_canonical(std::vector<int32_t> c) { return Poly(std::move(c)); }

 private:
  explicit Poly(std::vector<int32_t> c) : c_(std::move(c)) {}
  std::vector<int32_t> c_;
};

Poly add(const Fq& F, const Poly& a, const Poly& b);
Poly sub(const Fq& F, const Poly& a, const Poly& b);
Poly neg(const Fq& F, const Poly& a);
Poly mul(const Fq& F, const Poly& a, const Poly& b);
Poly mul_scalar(const Fq& F, const Poly& a, int32_t c);

/* quotient and remainder with deg r < deg b; errors if b is zero */
struct DivModResult {
  Poly quot;
  Poly rem;
};
DivModResult divmod(const Fq& F, const Poly& a, const Poly& b);
Poly mod(const Fq& F, const Poly& a, const Poly& b);

/* monic gcd; gcd(a, 0) = monic scaling of a; gcd(0, 0) errors */
Poly gcd(const Fq& F, const Poly& a, const Poly& b);

Poly derivative(const Fq& F, const Poly& a);
Poly make_monic(const Fq& F, const Poly& a);

/* f squarefree iff gcd(f, f') = 1; errors on the zero polynomial */
bool is_squarefree(const Fq& F, const Poly& f);

int32_t eval(const Fq& F, const Poly& a, int32_t x);

Poly pow_mod(const Fq& F, const Poly& base, uint64_t e, const Poly& modulus);

std::string to_string(const Poly& a);
Poly from_string(const Fq& F, const std::string& s);

}  // namespace ffmom
