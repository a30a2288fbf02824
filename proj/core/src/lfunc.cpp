#include "ffmom/lfunc.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "ffmom/charsum.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/extfield.hpp"

namespace ffmom {

static void validate_discriminant(const Fq& F, const Poly& D) {
  if (!D.is_monic() || D.deg() < 1 || D.deg() % 2 == 0)
    throw std::invalid_argument("discriminant must be monic of odd degree");
  if (!is_squarefree(F, D))
    throw std::invalid_argument("discriminant must be squarefree");
}

int64_t coeff_sum(const Fq& F, const Poly& D, int n) {
  if (D.is_zero() || !D.is_monic())
    throw std::invalid_argument("coeff_sum: D must be monic");
  if (n < 0) throw std::invalid_argument("coeff_sum: n must be >= 0");
  if (n == 0) return 1;
  int64_t s = 0;
  for_each_monic(F, n, 0, monic_count(F, n), [&](uint64_t, const Poly& f) {
    s += jacobi_symbol(F, D, f);
  });
  return s;
}

LPolynomial l_polynomial_charsum(const Fq& F, const Poly& D) {
  validate_discriminant(F, D);
  int g = (D.deg() - 1) / 2;
  LPolynomial L;
  L.s.assign(static_cast<size_t>(2 * g) + 1, 0);
  for (int n = 0; n <= g; ++n) L.s[static_cast<size_t>(n)] = coeff_sum(F, D, n);
  /* S_{2g-n} = q^(g-n) S_n folds the upper half back onto the lower */
  for (int n = 2 * g; n > g; --n) {
    int64_t p = 1;
    for (int i = 0; i < n - g; ++i) p *= F.q();
    L.s[static_cast<size_t>(n)] = p * L.s[static_cast<size_t>(2 * g - n)];
  }
  return L;
}

LPolynomial l_polynomial_charsum_direct(const Fq& F, const Poly& D) {
  validate_discriminant(F, D);
  int g = (D.deg() - 1) / 2;
  LPolynomial L;
  L.s.assign(static_cast<size_t>(2 * g) + 1, 0);
  for (int n = 0; n <= 2 * g; ++n) L.s[static_cast<size_t>(n)] = coeff_sum(F, D, n);
  return L;
}

std::vector<int64_t> point_counts(const Fq& F, const Poly& D, int rmax) {
  validate_discriminant(F, D);
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(rmax));
  for (int r = 1; r <= rmax; ++r) {
    ExtField E(F, r);
    int64_t s = 0;
    for (uint64_t x = 0; x < E.size(); ++x) s += E.eta(E.eval_poly(D, x));
    out.push_back(static_cast<int64_t>(E.size()) + 1 + s);
  }
  return out;
}

LPolynomial l_polynomial_pointcount(const Fq& F, const Poly& D) {
  validate_discriminant(F, D);
  int g = (D.deg() - 1) / 2;
  std::vector<int64_t> N = point_counts(F, D, 2 * g);
  /* power sums of the inverse roots, then Newton's identities for the
     elementary symmetric functions: k e_k = sum (-1)^(i-1) e_{k-i} p_i */
  std::vector<bigint> p, e;
  p.push_back(0);  /* unused index 0 */
  for (int r = 1; r <= 2 * g; ++r)
    p.push_back(bigint(-(N[static_cast<size_t>(r - 1)] -
                         static_cast<int64_t>(monic_count(F, r)) - 1)));
  e.assign(static_cast<size_t>(2 * g) + 1, bigint(0));
  e[0] = 1;
  for (int k = 1; k <= 2 * g; ++k) {
    bigint acc = 0;
    for (int i = 1; i <= k; ++i) {
      bigint term = e[static_cast<size_t>(k - i)] * p[static_cast<size_t>(i)];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % k != 0)
      throw std::logic_error("l_polynomial_pointcount: Newton identity not integral");
    e[static_cast<size_t>(k)] = acc / k;
  }
  LPolynomial L;
  L.s.assign(static_cast<size_t>(2 * g) + 1, 0);
  for (int k = 0; k <= 2 * g; ++k) {
    bigint v = (k % 2 == 0) ? e[static_cast<size_t>(k)] : -e[static_cast<size_t>(k)];
    L.s[static_cast<size_t>(k)] = v.convert_to<int64_t>();
  }
  return L;
}

QuadExt l_half(const Fq& F, const Poly& D) {
  validate_discriminant(F, D);
  int g = (D.deg() - 1) / 2;
  /* q^(-n/2) = q^(-(n+1)/2) sqrt(q) for odd n */
  auto half_power = [&](int n) {
    rational inv = 1;
    for (int i = 0; i < (n + 1) / 2; ++i) inv /= F.q();
    if (n % 2 == 0) return QuadExt(inv, rational(0));
    return QuadExt(rational(0), inv);
  };
  QuadExt out;
  for (int n = 0; n <= g; ++n) {
    int64_t sn = coeff_sum(F, D, n);
    QuadExt term = qe_mul_rat(half_power(n), rational(sn));
    out = qe_add(out, term);
    if (n <= g - 1) out = qe_add(out, term);
  }
  return out;
}

QuadExt l_eval_at_half(const Fq& F, const LPolynomial& L) {
  /* Horner at u = q^(-1/2) = (0) + (1/q) sqrt(q) */
  QuadExt u(rational(0), rational(1, F.q()));
  QuadExt acc;
  for (size_t n = L.s.size(); n-- > 0;) {
    acc = qe_mul(F.q(), acc, u);
    acc = qe_add(acc, QuadExt::integer(L.s[n]));
  }
  return acc;
}

bool fe_check(const Fq& F, const LPolynomial& L) {
  int g = L.genus();
  if (L.s.size() != static_cast<size_t>(2 * g + 1)) return false;
  for (int n = 0; n <= g; ++n) {
    bigint p = boost::multiprecision::pow(bigint(F.q()), static_cast<unsigned>(g - n));
    if (bigint(L.s[static_cast<size_t>(2 * g - n)]) != p * L.s[static_cast<size_t>(n)])
      return false;
  }
  return true;
}

/* ---- root finding ------------------------------------------------------ */

using ratvec = std::vector<rational>;  /* ascending coefficients */

static int rdeg(const ratvec& p) {
  int d = static_cast<int>(p.size()) - 1;
  while (d >= 0 && p[static_cast<size_t>(d)] == 0) --d;
  return d;
}

static ratvec rat_mod(const ratvec& a, const ratvec& b) {
  ratvec r = a;
  int db = rdeg(b);
  for (int i = rdeg(r); i >= db; --i) {
    rational c = r[static_cast<size_t>(i)] / b[static_cast<size_t>(db)];
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
    r[static_cast<size_t>(i)] = 0;
  }
  r.resize(static_cast<size_t>(db > 0 ? db : 1));
  return r;
}

static ratvec rat_divide_exact(const ratvec& a, const ratvec& b) {
  ratvec r = a, q;
  int db = rdeg(b), da = rdeg(a);
  q.assign(static_cast<size_t>(da - db + 1), rational(0));
  for (int i = da; i >= db; --i) {
    rational c = r[static_cast<size_t>(i)] / b[static_cast<size_t>(db)];
    q[static_cast<size_t>(i - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j)
      r[static_cast<size_t>(i - db + j)] -= c * b[static_cast<size_t>(j)];
  }
  if (rdeg(r) >= 0) throw std::logic_error("rat_divide_exact: nonzero remainder");
  return q;
}

static ratvec rat_gcd(ratvec a, ratvec b) {
  while (rdeg(b) >= 0) {
    ratvec r = rat_mod(a, b);
    a = std::move(b);
    b = std::move(r);
    if (rdeg(b) < 0) break;
  }
  /* monic normalization */
  int d = rdeg(a);
  rational lead = a[static_cast<size_t>(d)];
  for (auto& c : a) c /= lead;
  a.resize(static_cast<size_t>(d) + 1);
  return a;
}

RhCheck rh_check(const Fq& F, const LPolynomial& L, double tol) {
  ratvec P;
  for (int64_t c : L.s) P.emplace_back(c);
  int deg = rdeg(P);
  if (deg <= 0) return {true, 0.0, true};
  P.resize(static_cast<size_t>(deg) + 1);

  /* squarefree part: repeated roots share the radius, so dividing by
     gcd(P, P') loses nothing and keeps the solver quadratically convergent */
  ratvec dP(static_cast<size_t>(deg), rational(0));
  for (int i = 1; i <= deg; ++i) dP[static_cast<size_t>(i - 1)] = P[static_cast<size_t>(i)] * i;
  ratvec G = rat_gcd(P, dP);
  ratvec W = (rdeg(G) > 0) ? rat_divide_exact(P, G) : P;

  /* exact central zeros at u = +-q^(-1/2): evaluate in Q(sqrt(q)) and, if
     zero, divide the root out with QuadExt synthetic division */
  std::vector<QuadExt> wq;
  for (const rational& c : W) wq.emplace_back(c, rational(0));
  for (int sign : {+1, -1}) {
    QuadExt r(rational(0), rational(sign, F.q()));
    for (;;) {
      QuadExt val;
      for (size_t i = wq.size(); i-- > 0;) val = qe_add(qe_mul(F.q(), val, r), wq[i]);
      if (!val.is_zero() || wq.size() <= 1) break;
      /* synthetic division by (u - r): b_{i-1} = c_i + r b_i */
      std::vector<QuadExt> quot(wq.size() - 1);
      QuadExt carry;
      for (size_t i = wq.size(); i-- > 1;) {
        carry = qe_add(wq[i], qe_mul(F.q(), carry, r));
        quot[i - 1] = carry;
      }
      wq = std::move(quot);
    }
  }

  double target = 1.0 / std::sqrt(static_cast<double>(F.q()));
  int wdeg = static_cast<int>(wq.size()) - 1;
  if (wdeg <= 0) return {true, 0.0, true};

  using cplx = std::complex<long double>;
  std::vector<cplx> c(static_cast<size_t>(wdeg) + 1);
  for (int i = 0; i <= wdeg; ++i) {
    const QuadExt& v = wq[static_cast<size_t>(i)];
    long double a = v.a.convert_to<long double>();
    long double b = v.b.convert_to<long double>();
    c[static_cast<size_t>(i)] = cplx(a + b * std::sqrt(static_cast<long double>(F.q())), 0);
  }
  for (int i = 0; i <= wdeg; ++i) c[static_cast<size_t>(i)] /= c[static_cast<size_t>(wdeg)];

  auto eval = [&](cplx z) {
    cplx acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
  };
  auto deriv = [&](cplx z) {
    cplx acc = 0;
    for (size_t i = c.size(); i-- > 1;)
      acc = acc * z + c[i] * static_cast<long double>(i);
    return acc;
  };

  /* Durand-Kerner from a circle at the expected radius */
  std::vector<cplx> z(static_cast<size_t>(wdeg));
  for (int j = 0; j < wdeg; ++j) {
    long double th = 2.0L * 3.14159265358979323846L * (j + 0.26L) / wdeg;
    z[static_cast<size_t>(j)] =
        cplx(static_cast<long double>(target), 0) * cplx(std::cos(th), std::sin(th));
  }
  bool converged = false;
  for (int it = 0; it < 600 && !converged; ++it) {
    long double maxstep = 0;
    for (int j = 0; j < wdeg; ++j) {
      cplx num = eval(z[static_cast<size_t>(j)]);
      cplx den = 1;
      for (int k = 0; k < wdeg; ++k)
        if (k != j) den *= z[static_cast<size_t>(j)] - z[static_cast<size_t>(k)];
      if (den == cplx(0)) den = cplx(1e-30L, 0);
      cplx step = num / den;
      z[static_cast<size_t>(j)] -= step;
      maxstep = std::max(maxstep, std::abs(step));
    }
    if (maxstep < 1e-17L) converged = true;
  }
  for (int j = 0; j < wdeg; ++j) {
    for (int it = 0; it < 4; ++it) {
      cplx d = deriv(z[static_cast<size_t>(j)]);
      if (std::abs(d) < 1e-30L) break;
      z[static_cast<size_t>(j)] -= eval(z[static_cast<size_t>(j)]) / d;
    }
  }

  double maxdev = 0;
  for (int j = 0; j < wdeg; ++j)
    maxdev = std::max(maxdev,
                      std::abs(static_cast<double>(std::abs(z[static_cast<size_t>(j)])) - target));
  return {maxdev <= tol, maxdev, converged};
}

}  // namespace ffmom
