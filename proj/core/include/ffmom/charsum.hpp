#pragma once

#include "ffmom/cyclo.hpp"
#include "ffmom/factor.hpp"
#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

namespace ffmom {

/*
 * Jacobi symbol (A / Q) for Q monic of positive degree, extended to arbitrary
 * A by multiplicativity: for constants, (c / Q) = eta(c)^deg(Q); for P prime,
 * (A / P) = A^((|P|-1)/2) mod P in {-1, 0, +1}.  Computed by the Euclidean
 * swap (A / Q) = (Q / A) for monic arguments, valid without sign because
 * q = 1 (mod 4).  Returns 0 exactly when gcd(A, Q) != 1.
 *
 * chi_Q(A) := jacobi_symbol(A, Q) is the real Dirichlet character mod Q used
 * throughout: chi_D(f) for L-functions and chi_f(W) inside Gauss sums.
 */
int jacobi_symbol(const Fq& F, const Poly& A, const Poly& Q);

/* allocation-free kernel behind jacobi_symbol for hot sweeps: both buffers
   are clobbered; b must be monic of degree db >= 1, a holds degree da >= 0
   coefficients (da = -1 for the zero polynomial) */
int jacobi_raw(const Fq& F, int32_t* a, int da, int32_t* b, int db);

/*
 * Exponent of the additive character e(A/H) = zeta_q^t: t is the coefficient
 * of x^(-1) in the Laurent expansion of (A mod H)/H at infinity, extracted by
 * truncated series inversion of H.  Nonzero only when deg(A mod H) =
 * deg(H) - 1, where it equals the leading coefficient of the remainder.
 */
int32_t exp_eval(const Fq& F, const Poly& A, const Poly& H);

/*
 * Generalized Gauss sum G(V, chi_f) = sum over all residues W mod f of
 * chi_f(W) e(VW/f).  The direct form is the defining sum accumulated in
 * Z[zeta_q]; the fast form evaluates the prime-power closed form
 *
 *   f = P^i, alpha = v_P(V) (infinite for V = 0):
 *     i <= alpha:  phi(P^i) for i even, 0 for i odd
 *     i = alpha+1: -|P|^(i-1) for i even,
 *                  (V_1/P) |P|^(i-1) sqrt|P| for i odd, V = P^alpha V_1
 *     i >= alpha+2: 0
 *
 * multiplied over the prime powers of f, landing exactly in Q(sqrt(q)).
 */
CycloInt gauss_sum_direct(const Fq& F, const Poly& V, const Poly& f);
QuadExt gauss_sum_fast(const Fq& F, const Poly& V, const Poly& f);
QuadExt gauss_sum_fast(const Fq& F, const Poly& V, const Poly& f, const Factorization& fac);

/*
 * Dual-side evaluation of the character sum S(f, m) = sum_{g in M_m} chi_f(g):
 * lhs by direct enumeration, rhs by the Poisson-style Gauss-sum expansion
 *
 *   deg f = n even:
 *     (q^m/|f|) [ G(0,chi_f) + (q-1) sum_{V in M_{<= n-m-2}} G(V,chi_f)
 *                 - sum_{V in M_{n-m-1}} G(V,chi_f) ]
 *   deg f = n odd:
 *     (q^m/|f|) sqrt(q) sum_{V in M_{n-m-1}} G(V,chi_f)
 *
 * with empty degree ranges contributing zero sums, so the formula covers
 * m >= n as well (square f: q^(m-n) phi(f); non-square f: 0).
 */
struct PoissonCheck {
  QuadExt lhs;
  QuadExt rhs;
  bool equal;
};
PoissonCheck poisson_check(const Fq& F, const Poly& f, int m);

}  // namespace ffmom
