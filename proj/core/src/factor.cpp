#include "ffmom/factor.hpp"

#include <stdexcept>

namespace ffmom {

Factorization factorize(const Fq& F, const Poly& f) {
  if (f.is_zero()) throw std::domain_error("factorize: zero polynomial");
  if (!f.is_monic()) throw std::invalid_argument("factorize: not monic");
  Factorization fac;
  Poly rem = f;
  /* trial division by irreducibles of ascending degree; once the remaining
     cofactor has degree < 2d it is itself irreducible */
  for (int d = 1; rem.deg() >= 1; ++d) {
    if (rem.deg() < 2 * d) {
      fac.factors.push_back({rem, 1});
      break;
    }
    for (const Poly& p : irreducible_table(F, d)) {
      if (rem.deg() < 2 * d) break;
      int e = 0;
      for (;;) {
        auto dm = divmod(F, rem, p);
        if (!dm.rem.is_zero()) break;
        rem = dm.quot;
        ++e;
      }
      if (e > 0) fac.factors.push_back({p, e});
    }
    if (rem.deg() >= 1 && rem.deg() < 2 * d) {
      fac.factors.push_back({rem, 1});
      break;
    }
  }
  return fac;
}

Poly product(const Fq& F, const Factorization& fac) {
  Poly acc = Poly::one();
  for (const auto& pp : fac.factors)
    for (int i = 0; i < pp.e; ++i) acc = mul(F, acc, pp.p);
  return acc;
}

}  // namespace ffmom
