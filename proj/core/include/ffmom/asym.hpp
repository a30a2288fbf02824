#pragma once

#include "ffmom/fq.hpp"
#include "ffmom/quadext.hpp"

#include <string>

namespace ffmom {

// A float50 value together with a certified absolute error bound covering
// both truncation tails and accumulated rounding slop.
struct BoundedReal {
    float50 value;
    float50 bound;
};

BoundedReal br_exact(const rational& r);
BoundedReal br_from(const float50& v);
BoundedReal br_add(const BoundedReal& x, const BoundedReal& y);
BoundedReal br_sub(const BoundedReal& x, const BoundedReal& y);
BoundedReal br_mul(const BoundedReal& x, const BoundedReal& y);
BoundedReal br_div(const BoundedReal& x, const BoundedReal& y);
BoundedReal br_scale(const BoundedReal& x, const float50& c);

// Zeta of the rational function field: 1/(1 - q^(1-s)). Pole at s = 1.
// Integer s takes an exact rational path; the bound is 0 whenever the
// float50 value round-trips the rational exactly.
BoundedReal zeta_q(const Fq& F, const rational& s);

// Product over monic irreducibles of (1 - 1/((|P|+1)|P|)), grouped by
// degree up to `cutoff` with a certified tail bound.
BoundedReal constant_C1(const Fq& F, int cutoff);

// Logarithmic derivative of the same product at s = 1, divided by log q:
// sum over irreducibles of d(P) / ((|P|+1)|P| - 1), grouped by degree.
BoundedReal constant_CprimeC_over_logq(const Fq& F, int cutoff);

// Product over monic irreducibles of
//   1 - (|P|^(4/3) + |P|^(2/3) + |P|^(1/3) + 1) / (|P|^(4/3) + |P|)^2,
// grouped by degree up to 3*cutoff with a certified tail bound.
BoundedReal dproduct_special(const Fq& F, int cutoff);

// - sum over monic irreducibles of
//   d(P) (|P|-1)(|P|^(1/3)+1) / ((|P|^(1/3)-1)(|P|^(4/3)+|P|)^2),
// grouped by degree up to 3*cutoff with a certified tail bound. Negative.
BoundedReal dlog_sum_special(const Fq& F, int cutoff);

// Coefficients of the secondary-term polynomial R(x) = c1*x + c0.
struct RCoeffs {
    BoundedReal c0;
    BoundedReal c1;
};

RCoeffs r_polynomial(const Fq& F, int cutoff);

// Predicted first moment of L(1/2) over the degree-(2g+1) ensemble:
// main term, secondary term q^((2g+1)/3) * R(2g+1), and the error scale
// q^(g/2) of the remainder.
struct MomentPrediction {
    BoundedReal main;
    BoundedReal secondary;
    float50 error_scale;
};

MomentPrediction predict_moment(const Fq& F, int g, int cutoff = 30);

// Local Euler factors of the bivariate generating function identities,
// evaluated at real points with |P| = q^n. Exposed for cross-checks.
double bp_local(const Fq& F, int n, double z, double w);
double dp_local(const Fq& F, int n, double z, double w);
float50 dp_local50(const Fq& F, int n, const float50& z, const float50& w);


// Both sides of the shifted-Gauss-sum generating identity
//   sum_f w^d(f) prod_{P|f} (1 - 1/(|P|^2 z^d(P)))^{-1}
//     * sum_l z^d(l) G(l^2, chi_f)/sqrt|f|
//   = Z(z) Z(w) Z(q w^2 z) prod_P B_P(z, w),
// with both the f,l sums and the Euler product truncated at degree
// `trunc`. Requires z > 1/q^2, 0 <= w < q z, w < q^(-1/2), w z < 1/q,
// and trunc >= 4. The truncated direct sum only converges on the
// subregion q w < 1, q z < 1; outside it the check still runs but the
// reported delta reflects the divergence.
struct BzwCheck {
    double lhs;
    double rhs;
    double delta;
};

BzwCheck bzw_identity_check(const Fq& F, double z, double w, int trunc);

// Literal double sum over f and l (no grouping); feasible only for small
// trunc. Used to validate the grouped evaluator.
double bzw_lhs_literal(const Fq& F, double z, double w, int trunc);
double bzw_lhs_grouped(const Fq& F, double z, double w, int trunc);
double bzw_rhs(const Fq& F, double z, double w, int trunc);

}  // namespace ffmom
