#include "ffmom/asym.hpp"

#include "ffmom/charsum.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/factor.hpp"
#include "ffmom/poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ffmom {

namespace {

const float50 kEps("1e-48");
// Relative slop per grouped-product term, covering exp/log/pow chains on
// arguments of size up to ~100.
const float50 kSlop("1e-44");

float50 qpow50(const Fq& F, int n) {
    return pow(float50(F.q()), n);
}

float50 pi50(const Fq& F, int n) {
    return float50(irreducible_count(F, n));
}

}  // namespace

BoundedReal br_exact(const rational& r) {
    float50 v(r);
    rational back = static_cast<rational>(v);
    if (back == r) {
        return {v, float50(0)};
    }
    rational diff = back - r;
    if (diff < 0) {
        diff = -diff;
    }
    return {v, float50(diff) * 2};
}

BoundedReal br_from(const float50& v) {
    return {v, abs(v) * kEps};
}

BoundedReal br_add(const BoundedReal& x, const BoundedReal& y) {
    float50 v = x.value + y.value;
    return {v, x.bound + y.bound + kEps * abs(v)};
}

BoundedReal br_sub(const BoundedReal& x, const BoundedReal& y) {
    float50 v = x.value - y.value;
    return {v, x.bound + y.bound + kEps * abs(v)};
}

BoundedReal br_mul(const BoundedReal& x, const BoundedReal& y) {
    float50 v = x.value * y.value;
    float50 b = abs(x.value) * y.bound + abs(y.value) * x.bound +
                x.bound * y.bound + kEps * abs(v);
    return {v, b};
}

BoundedReal br_div(const BoundedReal& x, const BoundedReal& y) {
    float50 margin = abs(y.value) - y.bound;
    if (margin <= 0) {
        throw std::domain_error("division by an interval containing zero");
    }
    float50 v = x.value / y.value;
    float50 b = (x.bound + abs(v) * y.bound) / margin + kEps * abs(v);
    return {v, b};
}

BoundedReal br_scale(const BoundedReal& x, const float50& c) {
    return {x.value * c, x.bound * abs(c) + kEps * abs(x.value * c)};
}

BoundedReal zeta_q(const Fq& F, const rational& s) {
    if (s == 1) {
        throw std::domain_error("zeta_q has a pole at s = 1");
    }
    rational t = rational(1) - s;
    if (denominator(t) == 1) {
        bigint ti = numerator(t);
        if (ti > 4096 || ti < -4096) {
            throw std::invalid_argument("zeta_q exponent out of range");
        }
        int e = ti.convert_to<int>();
        rational x;
        if (e >= 0) {
            x = rational(pow(bigint(F.q()), static_cast<unsigned>(e)));
        } else {
            x = rational(1, pow(bigint(F.q()), static_cast<unsigned>(-e)));
        }
        return br_exact(rational(1) / (rational(1) - x));
    }
    float50 te = float50(t);
    float50 x = exp(te * log(float50(F.q())));
    float50 v = 1 / (1 - x);
    return {v, kSlop * abs(v)};
}

BoundedReal constant_C1(const Fq& F, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be positive");
    }
    float50 logsum = 0;
    float50 err = 0;
    for (int n = 1; n <= cutoff; ++n) {
        float50 p = qpow50(F, n);
        float50 x = 1 / ((p + 1) * p);
        float50 lf = (x < float50("1e-30")) ? -x * (1 + x / 2) : log(1 - x);
        float50 pi = pi50(F, n);
        logsum += pi * lf;
        err += kSlop * pi * (x + abs(lf));
    }
    // pi_q(n) <= q^n / n and |log(1 - x_n)| <= 2 q^(-2n), so the dropped
    // degrees contribute at most 2/(cutoff+1) * sum_{n > cutoff} q^(-n)
    // to |log| of the product.
    float50 qinv = 1 / float50(F.q());
    float50 tail =
        2 * pow(qinv, cutoff + 1) / ((cutoff + 1) * (1 - qinv));
    float50 v = exp(logsum);
    float50 t = tail + err;
    return {v, v * (t + t * t) + kEps * v};
}

BoundedReal constant_CprimeC_over_logq(const Fq& F, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be positive");
    }
    rational sum = 0;
    for (int n = 1; n <= cutoff; ++n) {
        bigint p = pow(bigint(F.q()), static_cast<unsigned>(n));
        sum += rational(irreducible_count(F, n) * n, (p + 1) * p - 1);
    }
    BoundedReal r = br_exact(sum);
    // n * pi_q(n) / ((q^n + 1) q^n - 1) <= q^(-n).
    float50 qinv = 1 / float50(F.q());
    r.bound += pow(qinv, cutoff) / (float50(F.q()) - 1);
    return r;
}

BoundedReal dproduct_special(const Fq& F, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be positive");
    }
    int N = 3 * cutoff;
    float50 lq = log(float50(F.q()));
    float50 logsum = 0;
    float50 err = 0;
    for (int n = 1; n <= N; ++n) {
        float50 u = exp(lq * n / 3);
        float50 num = u * u * u * u + u * u + u + 1;
        float50 den = u * u * u * u + u * u * u;
        den *= den;
        float50 r = num / den;
        float50 lf = (r < float50("1e-30")) ? -r * (1 + r / 2) : log(1 - r);
        float50 pi = pi50(F, n);
        logsum += pi * lf;
        err += kSlop * pi * (r + abs(lf));
    }
    // With t = |P|^(-1/3) <= 5^(-1/3): the per-prime factor is 1 - r(t)
    // with r(t) = t^4 (1 + t^2 + t^3 + t^4)/(1 + t)^2 <= 1.66 t^4 <= 0.20,
    // so |log(1 - r)| <= 2.06 t^4 and pi_q(n) <= q^n/(N+1) for n > N.
    float50 q13inv = exp(-lq / 3);
    float50 tail =
        float50("2.06") / (N + 1) * pow(q13inv, N + 1) / (1 - q13inv);
    float50 v = exp(logsum);
    float50 t = tail + err;
    return {v, v * (t + t * t) + kEps * v};
}

BoundedReal dlog_sum_special(const Fq& F, int cutoff) {
    if (cutoff < 1) {
        throw std::invalid_argument("cutoff must be positive");
    }
    int N = 3 * cutoff;
    float50 lq = log(float50(F.q()));
    float50 sum = 0;
    float50 err = 0;
    for (int n = 1; n <= N; ++n) {
        float50 u = exp(lq * n / 3);
        float50 p = qpow50(F, n);
        float50 den = p * u + p;
        den = (u - 1) * den * den;
        float50 h = (p - 1) * (u + 1) / den;
        float50 term = pi50(F, n) * n * h;
        sum += term;
        err += kSlop * term;
    }
    // The summand over P equals d(P) H(t), t = |P|^(-1/3), with
    // H(t) = t^5 (1 + t + t^2)/(1 + t) <= 1.25 t^5 for t <= 5^(-1/3),
    // so degrees n > N contribute at most 1.25 sum_{n > N} q^(-2n/3).
    float50 q23inv = exp(-2 * lq / 3);
    float50 tail = float50("1.25") * pow(q23inv, N + 1) / (1 - q23inv);
    return {-sum, tail + err + kEps * sum};
}

RCoeffs r_polynomial(const Fq& F, int cutoff) {
    BoundedReal z53 = zeta_q(F, rational(5, 3));
    BoundedReal z73 = zeta_q(F, rational(7, 3));
    BoundedReal z43 = zeta_q(F, rational(4, 3));
    BoundedReal dp = dproduct_special(F, cutoff);
    BoundedReal dl = dlog_sum_special(F, cutoff);

    float50 lq = log(float50(F.q()));
    BoundedReal q13 = br_from(exp(lq / 3));
    BoundedReal q23 = br_from(exp(2 * lq / 3));
    BoundedReal q43 = br_from(exp(4 * lq / 3));
    BoundedReal qq = br_exact(rational(F.q()));

    BoundedReal pref = br_mul(z53, z73);
    pref = br_div(pref, br_scale(br_mul(q23, br_mul(z43, z43)), 9));
    pref = br_mul(pref, dp);

    BoundedReal c1 = br_scale(pref, float50(1) / 2);

    BoundedReal poly = br_exact(rational(-5, 2));
    poly = br_sub(poly, br_scale(q13, 2));
    poly = br_sub(poly, br_scale(qq, 2));
    poly = br_add(poly, br_scale(q43, float50(1) / 2));
    BoundedReal inner = br_mul(br_div(z73, q43), poly);
    inner = br_sub(inner, br_mul(br_div(br_exact(2), q43), dl));
    BoundedReal c0 = br_mul(pref, inner);

    return {c0, c1};
}

MomentPrediction predict_moment(const Fq& F, int g, int cutoff) {
    if (g < 1) {
        throw std::invalid_argument("g must be positive");
    }
    BoundedReal c1v = constant_C1(F, cutoff);
    BoundedReal cpc = constant_CprimeC_over_logq(F, cutoff);
    BoundedReal z2 = zeta_q(F, rational(2));
    RCoeffs rc = r_polynomial(F, cutoff);

    bigint qpow = pow(bigint(F.q()), static_cast<unsigned>(2 * g + 1));
    BoundedReal scale = br_exact(rational(qpow));

    BoundedReal bracket = br_add(br_exact(rational(2 * g + 2)),
                                 br_scale(cpc, 4));
    BoundedReal main = br_div(c1v, br_scale(z2, 2));
    main = br_mul(main, bracket);
    main = br_mul(main, scale);

    float50 lq = log(float50(F.q()));
    BoundedReal q3 = br_from(exp(lq * (2 * g + 1) / 3));
    BoundedReal rval = br_add(br_scale(rc.c1, float50(2 * g + 1)), rc.c0);
    BoundedReal secondary = br_mul(q3, rval);

    return {main, secondary, exp(lq * g / 2)};
}

double bp_local(const Fq& F, int n, double z, double w) {
    double p = std::pow(static_cast<double>(F.q()), n);
    double zd = std::pow(z, n);
    double wd = std::pow(w, n);
    double num = wd - wd * wd * zd * p * p - wd * zd * zd * p * p +
                 wd * wd * wd * zd * zd * p * p + wd * wd * zd * p -
                 wd * wd * wd * zd * p;
    double den = zd * p * p - 1;
    return 1 + num / den;
}

double dp_local(const Fq& F, int n, double z, double w) {
    double p = std::pow(static_cast<double>(F.q()), n);
    double zd = std::pow(z, n);
    double wd = std::pow(w, n);
    double num = -wd * wd - wd * wd * wd / p + wd / (p * p * zd) +
                 p * wd * wd * zd + wd * wd * zd - p * p * wd * zd * zd +
                 wd * wd * wd * zd - p * p * wd * wd * zd * zd;
    double den = (p * p * zd - 1) * (1 + wd);
    return 1 + num / den;
}

float50 dp_local50(const Fq& F, int n, const float50& z, const float50& w) {
    float50 p = qpow50(F, n);
    float50 zd = pow(z, n);
    float50 wd = pow(w, n);
    float50 num = -wd * wd - wd * wd * wd / p + wd / (p * p * zd) +
                  p * wd * wd * zd + wd * wd * zd - p * p * wd * zd * zd +
                  wd * wd * wd * zd - p * p * wd * wd * zd * zd;
    float50 den = (p * p * zd - 1) * (1 + wd);
    return 1 + num / den;
}

namespace {

struct PairDE {
    int d;
    int e;
};

struct BzwGrouped {
    const Fq* F;
    int T;
    double w;
    std::vector<double> pi;
    std::vector<double> zpow;
    std::vector<double> qpow;
    std::vector<PairDE> cur;
    std::vector<double> cop;
    std::vector<double> cz;
    double total = 0;

    double count_profile() const {
        double cnt = 1;
        std::size_t i = 0;
        while (i < cur.size()) {
            std::size_t j = i;
            while (j < cur.size() && cur[j].d == cur[i].d) {
                ++j;
            }
            double avail = pi[static_cast<std::size_t>(cur[i].d)];
            for (std::size_t t = i; t < j; ++t) {
                cnt *= avail;
                avail -= 1;
                if (cnt == 0) {
                    return 0;
                }
            }
            std::size_t r = i;
            while (r < j) {
                std::size_t s = r;
                double m = 1;
                while (s < j && cur[s].e == cur[r].e) {
                    ++s;
                    m *= static_cast<double>(s - r);
                }
                cnt /= m;
                r = s;
            }
            i = j;
        }
        return cnt;
    }

    void vsum(std::size_t idx, int used, double gam, double& acc) const {
        if (idx == cur.size()) {
            acc += gam * cz[static_cast<std::size_t>(T - used)];
            return;
        }
        int d = cur[idx].d;
        int e = cur[idx].e;
        if (e % 2 == 1) {
            int v = (e - 1) / 2;
            if (used + v * d > T) {
                return;
            }
            double g = std::pow(qpow[static_cast<std::size_t>(d)],
                                (e - 1) / 2) *
                       zpow[static_cast<std::size_t>(v * d)];
            vsum(idx + 1, used + v * d, gam * g, acc);
            return;
        }
        double phi = std::pow(qpow[static_cast<std::size_t>(d)], e / 2) *
                     (1 - 1 / qpow[static_cast<std::size_t>(d)]);
        for (int v = e / 2; used + v * d <= T; ++v) {
            double g = phi * zpow[static_cast<std::size_t>(v * d)];
            vsum(idx + 1, used + v * d, gam * g, acc);
        }
    }

    void contribute() {
        double cnt = count_profile();
        if (cnt == 0) {
            return;
        }
        int D = 0;
        double zfac = 1;
        for (const PairDE& pr : cur) {
            D += pr.d * pr.e;
            double pd = qpow[static_cast<std::size_t>(pr.d)];
            zfac /= 1 - 1 / (pd * pd * zpow[static_cast<std::size_t>(pr.d)]);
        }
        std::size_t n = static_cast<std::size_t>(T) + 1;
        cop.assign(n, 0);
        double qp = 1;
        for (std::size_t j = 0; j < n; ++j) {
            cop[j] = qp;
            qp *= static_cast<double>(F->q());
        }
        for (const PairDE& pr : cur) {
            for (int j = T; j >= pr.d; --j) {
                cop[static_cast<std::size_t>(j)] -=
                    cop[static_cast<std::size_t>(j - pr.d)];
            }
        }
        cz.assign(n, 0);
        double run = 0;
        for (std::size_t j = 0; j < n; ++j) {
            run += cop[j] * zpow[j];
            cz[j] = run;
        }
        double acc = 0;
        vsum(0, 0, 1, acc);
        total += cnt * std::pow(w, D) * zfac * acc;
    }

    void rec(int lastd, int laste, int budget) {
        contribute();
        for (int d = lastd; d <= budget; ++d) {
            int emin = (d == lastd) ? laste : 1;
            for (int e = emin; d * e <= budget; ++e) {
                cur.push_back({d, e});
                rec(d, e, budget - d * e);
                cur.pop_back();
            }
        }
    }
};

void check_bzw_region(const Fq& F, double z, double w) {
    double q = static_cast<double>(F.q());
    bool ok = z > 1 / (q * q) && w >= 0 && w < q * z &&
              w < 1 / std::sqrt(q) && w * z < 1 / q;
    if (!ok) {
        throw std::invalid_argument(
            "(z, w) outside the identity's convergence region");
    }
}

}  // namespace

double bzw_lhs_grouped(const Fq& F, double z, double w, int trunc) {
    check_bzw_region(F, z, w);
    if (trunc < 0 || trunc > 40) {
        throw std::invalid_argument("trunc out of range");
    }
    BzwGrouped ctx;
    ctx.F = &F;
    ctx.T = trunc;
    ctx.w = w;
    ctx.pi.resize(static_cast<std::size_t>(trunc) + 1, 0);
    ctx.qpow.resize(static_cast<std::size_t>(trunc) + 1, 1);
    ctx.zpow.resize(static_cast<std::size_t>(trunc) + 1, 1);
    for (int d = 1; d <= trunc; ++d) {
        ctx.pi[static_cast<std::size_t>(d)] =
            irreducible_count(F, d).convert_to<double>();
        ctx.qpow[static_cast<std::size_t>(d)] =
            ctx.qpow[static_cast<std::size_t>(d - 1)] *
            static_cast<double>(F.q());
        ctx.zpow[static_cast<std::size_t>(d)] =
            ctx.zpow[static_cast<std::size_t>(d - 1)] * z;
    }
    ctx.rec(1, 1, trunc);
    return ctx.total;
}

double bzw_lhs_literal(const Fq& F, double z, double w, int trunc) {
    check_bzw_region(F, z, w);
    if (trunc < 0 || trunc > 6) {
        throw std::invalid_argument("literal evaluation needs trunc <= 6");
    }
    double q = static_cast<double>(F.q());
    double total = 0;
    for (int nf = 0; nf <= trunc; ++nf) {
        std::uint64_t cnt = monic_count(F, nf);
        for (std::uint64_t i = 0; i < cnt; ++i) {
            Poly f = monic_of_index(F, nf, i);
            Factorization fac = factorize(F, f);
            double zfac = 1;
            for (const PrimePower& pp : fac.factors) {
                int d = pp.p.deg();
                zfac /= 1 - 1 / (std::pow(q, 2 * d) * std::pow(z, d));
            }
            double inner = 0;
            for (int nl = 0; nl <= trunc; ++nl) {
                std::uint64_t lcnt = monic_count(F, nl);
                for (std::uint64_t j = 0; j < lcnt; ++j) {
                    Poly l = monic_of_index(F, nl, j);
                    QuadExt G = gauss_sum_fast(F, mul(F, l, l), f, fac);
                    inner += std::pow(z, nl) * qe_to_double(F.q(), G);
                }
            }
            total += std::pow(w, nf) * zfac * inner * std::pow(q, -0.5 * nf);
        }
    }
    return total;
}

double bzw_rhs(const Fq& F, double z, double w, int trunc) {
    check_bzw_region(F, z, w);
    double q = static_cast<double>(F.q());
    double rhs = 1 / (1 - q * z);
    rhs /= 1 - q * w;
    rhs /= 1 - q * (q * w * w * z);
    for (int n = 1; n <= trunc; ++n) {
        double pi = irreducible_count(F, n).convert_to<double>();
        rhs *= std::pow(bp_local(F, n, z, w), pi);
    }
    return rhs;
}

BzwCheck bzw_identity_check(const Fq& F, double z, double w, int trunc) {
    if (trunc < 4) {
        throw std::invalid_argument("trunc must be at least 4");
    }
    double lhs = bzw_lhs_grouped(F, z, w, trunc);
    double rhs = bzw_rhs(F, z, w, trunc);
    return {lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace ffmom
