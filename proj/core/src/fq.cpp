#include "ffmom/fq.hpp"

namespace ffmom {

static bool is_small_prime(int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

bool Fq::is_valid_modulus(int64_t q) {
  return q % 4 == 1 && is_small_prime(q);
}

Fq::Fq(int64_t q) : q_(q) {
  if (!is_valid_modulus(q))
    throw std::invalid_argument("q must be a prime = 1 mod 4");
  if (q > (1 << 20))
    throw std::invalid_argument("q too large for table-based field context");
  inv_.assign(static_cast<size_t>(q), 0);
  eta_.assign(static_cast<size_t>(q), 0);
  for (int32_t a = 1; a < q; ++a) {
    inv_[static_cast<size_t>(a)] = pow(a, static_cast<uint64_t>(q - 2));
    int32_t e = pow(a, static_cast<uint64_t>((q - 1) / 2));
    /* e is q-1 or 1; report as -1 / +1 */
    eta_[static_cast<size_t>(a)] = (e == 1) ? 1 : -1;
  }
}

int32_t Fq::pow(int32_t a, uint64_t e) const {
  int64_t base = a, acc = 1;
  while (e) {
    if (e & 1) acc = (acc * base) % q_;
    base = (base * base) % q_;
    e >>= 1;
  }
  return static_cast<int32_t>(acc);
}

}  // namespace ffmom
