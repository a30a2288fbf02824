#pragma once

#include <cstdint>
#include <vector>

#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

namespace ffmom {

/*
 * For D monic squarefree of degree 2g+1, L(u, chi_D) = sum_f chi_D(f) u^deg(f)
 * over monic f collapses to a polynomial of degree 2g with integer
 * coefficients S_n = sum_{f in M_n} chi_D(f), satisfying the functional
 * equation S_{2g-n} = q^(g-n) S_n and the Riemann hypothesis: all roots on
 * |u| = q^(-1/2).  The completed central value is
 *
 *   L(1/2, chi_D) = sum_{n <= g} S_n q^(-n/2) + sum_{n <= g-1} S_n q^(-n/2),
 *
 * an exact element of Q(sqrt(q)), equal to evaluating the full polynomial at
 * u = q^(-1/2) (the second sum is the dual piece the functional equation
 * folds back).
 */
struct LPolynomial {
  std::vector<int64_t> s;  /* s[n] = S_n for 0 <= n <= 2g */

  int genus() const { return (static_cast<int>(s.size()) - 1) / 2; }
};

/* S_n(D) by direct enumeration of M_n; D monic, nonzero */
int64_t coeff_sum(const Fq& F, const Poly& D, int n);

/* production route: S_0..S_g directly, the upper half from the functional
   equation; errors unless D is monic squarefree of odd degree */
LPolynomial l_polynomial_charsum(const Fq& F, const Poly& D);

/* test route: every coefficient by direct enumeration */
LPolynomial l_polynomial_charsum_direct(const Fq& F, const Poly& D);

/*
 * Point-count route: over F_{q^r} the curve y^2 = D(x) has
 *   N_r = q^r + 1 + sum_x eta_r(D(x))
 * points (one at infinity, deg D odd), eta_r the quadratic character of
 * F_{q^r}.  The power sums of the inverse roots are p_r = -(N_r - q^r - 1)
 * and Newton's identities rebuild the coefficients integrally.
 */
std::vector<int64_t> point_counts(const Fq& F, const Poly& D, int rmax);
LPolynomial l_polynomial_pointcount(const Fq& F, const Poly& D);

QuadExt l_half(const Fq& F, const Poly& D);

/* L evaluated at u = q^(-1/2), exact */
QuadExt l_eval_at_half(const Fq& F, const LPolynomial& L);

/* exact functional-equation test S_{2g-n} = q^(g-n) S_n for 0 <= n <= g */
bool fe_check(const Fq& F, const LPolynomial& L);

/*
 * All roots of L: pass iff every |root| is within tol of q^(-1/2).  Exact
 * central zeros at u = +-q^(-1/2) are divided out in Q(sqrt(q)) first; the
 * rest go through a Durand-Kerner solve with Newton polish.  converged
 * reports whether the iteration met its internal step tolerance.
 */
struct RhCheck {
  bool pass;
  double max_deviation;
  bool converged;
};
RhCheck rh_check(const Fq& F, const LPolynomial& L, double tol);

}  // namespace ffmom
