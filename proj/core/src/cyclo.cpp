#include "ffmom/cyclo.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffmom {

CycloInt cyclo_add(const CycloInt& x, const CycloInt& y) {
  if (x.c.size() != y.c.size()) throw std::invalid_argument("cyclo_add: size mismatch");
  CycloInt out(x.qsize());
  for (size_t j = 0; j < x.c.size(); ++j) out.c[j] = x.c[j] + y.c[j];
  return out;
}

CycloInt cyclo_neg(const CycloInt& x) {
  CycloInt out(x.qsize());
  for (size_t j = 0; j < x.c.size(); ++j) out.c[j] = -x.c[j];
  return out;
}

CycloInt cyclo_canonical(const CycloInt& x) {
  CycloInt out = x;
  int64_t m = *std::min_element(out.c.begin(), out.c.end());
  for (auto& v : out.c) v -= m;
  return out;
}

bool cyclo_equal(const CycloInt& x, const CycloInt& y) {
  if (x.c.size() != y.c.size()) return false;
  int64_t shift = x.c[0] - y.c[0];
  for (size_t j = 0; j < x.c.size(); ++j)
    if (x.c[j] - y.c[j] != shift) return false;
  return true;
}

QuadExt reduce_to_quadext(const Fq& F, const CycloInt& x) {
  if (x.qsize() != F.q()) throw std::invalid_argument("reduce_to_quadext: size mismatch");
  /* counts must be constant on quadratic residues and on non-residues:
     c_0 = a + s, c_j = b*eta(j) + s for j >= 1, s the all-ones shift */
  bool have_u = false, have_v = false;
  int64_t u = 0, v = 0;
  for (int32_t j = 1; j < F.q(); ++j) {
    int64_t cj = x.c[static_cast<size_t>(j)];
    if (F.eta(j) == 1) {
      if (have_u && u != cj)
        throw std::domain_error("reduce_to_quadext: not constant on residue class");
      u = cj;
      have_u = true;
    } else {
      if (have_v && v != cj)
        throw std::domain_error("reduce_to_quadext: not constant on non-residue class");
      v = cj;
      have_v = true;
    }
  }
  if ((u - v) % 2 != 0)
    throw std::domain_error("reduce_to_quadext: class values differ by an odd amount");
  int64_t b = (u - v) / 2;
  int64_t s = u - b;
  int64_t a = x.c[0] - s;
  return QuadExt(rational(a), rational(b));
}

}  // namespace ffmom
