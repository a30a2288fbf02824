#include "ffmom/charsum.hpp"

#include <stdexcept>

#include "ffmom/enumerate.hpp"

namespace ffmom {

/* in-place Euclidean Jacobi on raw coefficient buffers; degrees da, db with
   -1 marking zero; b monic throughout.  Shared by the Poly wrapper and the
   allocation-free ensemble sweep. */
int jacobi_raw(const Fq& F, int32_t* a, int da, int32_t* b, int db) {
  int acc = 1;
  for (;;) {
    /* a <- a mod b */
    while (da >= db) {
      int32_t c = a[da];
      if (c != 0) {
        for (int j = 0; j < db; ++j)
          a[da - db + j] = F.sub(a[da - db + j], F.mul(c, b[j]));
        a[da] = 0;
      }
      --da;
    }
    while (da >= 0 && a[da] == 0) --da;
    if (da < 0) return 0;
    /* strip the constant: (c / b) = eta(c)^deg(b) */
    int32_t lead = a[da];
    if (lead != 1) {
      if ((db & 1) && F.eta(lead) == -1) acc = -acc;
      int32_t linv = F.inv(lead);
      for (int j = 0; j <= da; ++j) a[j] = F.mul(a[j], linv);
    }
    if (da == 0) return acc;
    /* reciprocity swap for monic arguments, q = 1 (mod 4) */
    std::swap(a, b);
    std::swap(da, db);
  }
}

int jacobi_symbol(const Fq& F, const Poly& A, const Poly& Q) {
  if (!Q.is_monic() || Q.deg() < 1)
    throw std::invalid_argument("jacobi_symbol: modulus must be monic of degree >= 1");
  if (A.is_zero()) return 0;
  std::vector<int32_t> a(A.coeffs()), b(Q.coeffs());
  return jacobi_raw(F, a.data(), A.deg(), b.data(), Q.deg());
}

int32_t exp_eval(const Fq& F, const Poly& A, const Poly& H) {
  if (!H.is_monic() || H.deg() < 1)
    throw std::invalid_argument("exp_eval: modulus must be monic of degree >= 1");
  Poly R = mod(F, A, H);
  if (R.is_zero()) return 0;
  int n = H.deg(), m = R.deg();
  /* (R/H)(x) = (sum_k r_k x^k) x^(-n) (1 + h_{n-1}/x + ...)^(-1); the x^(-1)
     coefficient pairs r_k with inverse-series order i = k - n + 1, and since
     k <= m <= n - 1 only i = 0 is reachable: the result is the leading
     coefficient of R when deg R = n - 1 and zero otherwise */
  std::vector<int32_t> inv(static_cast<size_t>(n), 0);
  inv[0] = 1;
  for (int i = 1; i < n; ++i) {
    int32_t s = 0;
    for (int t = 1; t <= i; ++t)
      s = F.add(s, F.mul(H.coeff(n - t), inv[static_cast<size_t>(i - t)]));
    inv[static_cast<size_t>(i)] = F.neg(s);
  }
  int32_t out = 0;
  for (int k = 0; k <= m; ++k) {
    int i = k - n + 1;
    if (i < 0) continue;
    out = F.add(out, F.mul(R.coeff(k), inv[static_cast<size_t>(i)]));
  }
  return out;
}

CycloInt gauss_sum_direct(const Fq& F, const Poly& V, const Poly& f) {
  if (!f.is_monic() || f.deg() < 1)
    throw std::invalid_argument("gauss_sum_direct: modulus must be monic of degree >= 1");
  int n = f.deg();
  int64_t q = F.q();
  CycloInt out(q);
  std::vector<int32_t> w(static_cast<size_t>(n), 0);
  uint64_t total = monic_count(F, n);
  for (uint64_t idx = 0;; ++idx) {
    std::vector<int32_t> wc(w);
    while (!wc.empty() && wc.back() == 0) wc.pop_back();
    Poly W = Poly::from_canonical(std::move(wc));
    int chi = W.is_zero() ? 0 : jacobi_symbol(F, W, f);
    if (chi != 0) out.add_root(exp_eval(F, mul(F, V, W), f), chi);
    if (idx + 1 == total) break;
    for (int i = 0; i < n; ++i) {
      if (++w[static_cast<size_t>(i)] < q) break;
      w[static_cast<size_t>(i)] = 0;
    }
  }
  return out;
}

/* q^e as an exact rational */
static rational qpow(int64_t q, int e) {
  rational r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

static QuadExt gauss_prime_power(const Fq& F, const Poly& V, const Poly& P, int i) {
  int d = P.deg();
  /* alpha = v_P(V), with V = 0 treated as alpha = infinity */
  int alpha = 0;
  Poly V1 = V;
  bool infinite = V.is_zero();
  if (!infinite) {
    for (;;) {
      auto dm = divmod(F, V1, P);
      if (!dm.rem.is_zero()) break;
      V1 = dm.quot;
      ++alpha;
    }
  }
  if (infinite || i <= alpha) {
    if (i % 2 == 0) {
      /* phi(P^i) = |P|^(i-1) (|P| - 1) */
      rational v = qpow(F.q(), d * (i - 1)) * (qpow(F.q(), d) - 1);
      return QuadExt(v, rational(0));
    }
    return QuadExt();
  }
  if (i == alpha + 1) {
    if (i % 2 == 0) return QuadExt(-qpow(F.q(), d * (i - 1)), rational(0));
    int chi = jacobi_symbol(F, V1, P);
    if (chi == 0) return QuadExt();
    /* |P|^(i-1) sqrt|P| = q^(d(i-1) + floor(d/2)) * (sqrt(q) if d odd) */
    rational mag = qpow(F.q(), d * (i - 1) + d / 2);
    if (chi < 0) mag = -mag;
    if (d % 2 == 0) return QuadExt(mag, rational(0));
    return QuadExt(rational(0), mag);
  }
  return QuadExt();
}

QuadExt gauss_sum_fast(const Fq& F, const Poly& V, const Poly& f, const Factorization& fac) {
  QuadExt acc = QuadExt::integer(1);
  for (const auto& pp : fac.factors) {
    QuadExt g = gauss_prime_power(F, V, pp.p, pp.e);
    if (g.is_zero()) return QuadExt();
    acc = qe_mul(F.q(), acc, g);
  }
  return acc;
}

QuadExt gauss_sum_fast(const Fq& F, const Poly& V, const Poly& f) {
  if (!f.is_monic() || f.deg() < 1)
    throw std::invalid_argument("gauss_sum_fast: modulus must be monic of degree >= 1");
  return gauss_sum_fast(F, V, f, factorize(F, f));
}

PoissonCheck poisson_check(const Fq& F, const Poly& f, int m) {
  if (!f.is_monic() || f.deg() < 1)
    throw std::invalid_argument("poisson_check: f must be monic of degree >= 1");
  if (m < 0) throw std::invalid_argument("poisson_check: m must be >= 0");
  int n = f.deg();
  Factorization fac = factorize(F, f);

  int64_t lhs_int = 0;
  uint64_t total = monic_count(F, m);
  for_each_monic(F, m, 0, total, [&](uint64_t, const Poly& g) {
    lhs_int += jacobi_symbol(F, g, f);
  });
  QuadExt lhs = QuadExt::integer(lhs_int);

  auto sum_gauss_degree = [&](int deg) {
    QuadExt s;
    if (deg < 0) return s;
    for_each_monic(F, deg, 0, monic_count(F, deg), [&](uint64_t, const Poly& V) {
      s = qe_add(s, gauss_sum_fast(F, V, f, fac));
    });
    return s;
  };

  QuadExt rhs;
  rational scale = qpow(F.q(), m) / qpow(F.q(), n);
  if (n % 2 == 0) {
    QuadExt bracket = gauss_sum_fast(F, Poly::zero(), f, fac);
    QuadExt low;
    for (int d = 0; d <= n - m - 2; ++d) low = qe_add(low, sum_gauss_degree(d));
    bracket = qe_add(bracket, qe_mul_rat(low, rational(F.q() - 1)));
    bracket = qe_sub(bracket, sum_gauss_degree(n - m - 1));
    rhs = qe_mul_rat(bracket, scale);
  } else {
    QuadExt top = sum_gauss_degree(n - m - 1);
    rhs = qe_mul_rat(qe_mul(F.q(), top, QuadExt(rational(0), rational(1))), scale);
  }
  return {lhs, rhs, lhs == rhs};
}

}  // namespace ffmom
