#include "ffmom/extfield.hpp"

#include <stdexcept>

#include "ffmom/enumerate.hpp"

namespace ffmom {

ExtField::ExtField(const Fq& F, int r) : F_(F), r_(r) {
  if (r < 1) throw std::invalid_argument("ExtField: r must be >= 1");
  size_ = monic_count(F, r);
  if (size_ > (1ull << 24))
    throw std::invalid_argument("ExtField: q^r too large for exhaustive tables");
  modulus_ = first_irreducible(F, r);
  eta_.assign(size_, -1);
  eta_[0] = 0;
  for (uint64_t y = 1; y < size_; ++y) eta_[mul(y, y)] = 1;
}

void ExtField::decode(uint64_t a, int32_t* out) const {
  uint64_t q = static_cast<uint64_t>(F_.q());
  for (int i = 0; i < r_; ++i) {
    out[i] = static_cast<int32_t>(a % q);
    a /= q;
  }
}

uint64_t ExtField::encode(const int32_t* c) const {
  uint64_t q = static_cast<uint64_t>(F_.q());
  uint64_t a = 0;
  for (int i = r_ - 1; i >= 0; --i) a = a * q + static_cast<uint64_t>(c[i]);
  return a;
}

uint64_t ExtField::add(uint64_t a, uint64_t b) const {
  int32_t ca[32], cb[32];
  decode(a, ca);
  decode(b, cb);
  for (int i = 0; i < r_; ++i) ca[i] = F_.add(ca[i], cb[i]);
  return encode(ca);
}

uint64_t ExtField::mul(uint64_t a, uint64_t b) const {
  int32_t ca[32], cb[32], prod[63] = {0};
  decode(a, ca);
  decode(b, cb);
  for (int i = 0; i < r_; ++i) {
    if (ca[i] == 0) continue;
    for (int j = 0; j < r_; ++j)
      prod[i + j] = F_.add(prod[i + j], F_.mul(ca[i], cb[j]));
  }
  /* reduce mod m_r, monic */
  for (int i = 2 * r_ - 2; i >= r_; --i) {
    int32_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (int j = 0; j < r_; ++j)
      prod[i - r_ + j] = F_.sub(prod[i - r_ + j], F_.mul(c, modulus_.coeff(j)));
  }
  return encode(prod);
}

uint64_t ExtField::eval_poly(const Poly& D, uint64_t x) const {
  uint64_t acc = 0;
  for (int i = D.deg(); i >= 0; --i) {
    acc = mul(acc, x);
    acc = add(acc, static_cast<uint64_t>(D.coeff(i)));
  }
  return acc;
}

}  // namespace ffmom
