#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ffmom {

/*
 * Prime field F_q for odd primes q = 1 (mod 4).  The congruence condition
 * makes -1 a square, so quadratic reciprocity over F_q[x] has no sign:
 * (A/B) = (B/A) for monic coprime A, B.  Everything downstream assumes it.
 *
 * Elements are canonical residues 0 <= a < q stored in int32_t.  The context
 * precomputes inverses and the quadratic-residue character
 *     eta(c) = c^((q-1)/2) in {+1, -1},  eta(0) = 0,
 * which is what the Jacobi symbol of a constant reduces to:
 * (c / Q) = eta(c)^deg(Q).
 */
class Fq {
 public:
  explicit Fq(int64_t q);

  int64_t q() const { return q_; }

  int32_t add(int32_t a, int32_t b) const {
    int32_t s = a + b;
    return s >= q_ ? s - static_cast<int32_t>(q_) : s;
  }
  int32_t sub(int32_t a, int32_t b) const {
    int32_t s = a - b;
    return s < 0 ? s + static_cast<int32_t>(q_) : s;
  }
  int32_t neg(int32_t a) const { return a == 0 ? 0 : static_cast<int32_t>(q_) - a; }
  int32_t mul(int32_t a, int32_t b) const {
    return static_cast<int32_t>((static_cast<int64_t>(a) * b) % q_);
  }
  int32_t inv(int32_t a) const {
    if (a == 0) throw std::domain_error("Fq::inv: zero has no inverse");
    return inv_[static_cast<size_t>(a)];
  }
  int32_t pow(int32_t a, uint64_t e) const;

  /* quadratic-residue character of a constant; 0 maps to 0 */
  int32_t eta(int32_t a) const { return eta_[static_cast<size_t>(a)]; }

  /* canonical residue of an arbitrary integer */
  int32_t reduce(int64_t a) const {
    int64_t r = a % q_;
    if (r < 0) r += q_;
    return static_cast<int32_t>(r);
  }

  bool operator==(const Fq& o) const { return q_ == o.q_; }

  static bool is_valid_modulus(int64_t q);

 private:
  int64_t q_;
  std::vector<int32_t> inv_;
  std::vector<int32_t> eta_;
};

}  // namespace ffmom
