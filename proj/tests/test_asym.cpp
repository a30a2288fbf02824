#include "doctest.h"

#include "ffmom/asym.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/fq.hpp"
#include "ffmom/quadext.hpp"

#include <cmath>
#include <stdexcept>

using namespace ffmom;

namespace {

bool near(double a, double b, double rel) {
    return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

bool near50(const float50& a, const float50& b, const float50& rel) {
    float50 scale = 1;
    if (abs(a) > scale) scale = abs(a);
    if (abs(b) > scale) scale = abs(b);
    return abs(a - b) <= rel * scale;
}

float50 pi50(const Fq& F, int n) {
    return static_cast<float50>(irreducible_count(F, n));
}

}  // namespace

TEST_SUITE("asym") {

TEST_CASE("zeta of the rational function field") {
    Fq F(5);
    BoundedReal z2 = zeta_q(F, rational(2));
    CHECK(z2.value == float50(5) / 4);
    CHECK(z2.bound == 0);
    BoundedReal z43 = zeta_q(F, rational(4, 3));
    CHECK(z43.value > 1);
    CHECK(z43.bound < float50("1e-40"));
    CHECK_THROWS_AS(zeta_q(F, rational(1)), std::domain_error);
    Fq G(13);
    CHECK(zeta_q(G, rational(2)).value == float50(13) / 12);
}

TEST_CASE("logarithmic derivative leading term") {
    Fq F(5);
    BoundedReal one = constant_CprimeC_over_logq(F, 1);
    CHECK(one.value == static_cast<float50>(rational(5, 29)));
}

TEST_CASE("euler products stabilize within their certified bounds") {
    Fq F(5);
    auto window = [&](BoundedReal (*fn)(const Fq&, int)) {
        BoundedReal a = fn(F, 20);
        BoundedReal b = fn(F, 40);
        CHECK(abs(a.value - b.value) <= a.bound);
        CHECK(b.bound <= a.bound);
        return a;
    };
    BoundedReal c1 = window(constant_C1);
    CHECK(c1.value > 0);
    CHECK(c1.value < 1);
    CHECK(near50(c1.value, float50("0.828694231577355"), float50("1e-13")));
    BoundedReal cpc = window(constant_CprimeC_over_logq);
    CHECK(near50(cpc.value, float50("0.212782298433799"), float50("1e-13")));
    BoundedReal dp = window(dproduct_special);
    CHECK(near50(dp.value, float50("0.556701680025596"), float50("1e-13")));
    BoundedReal dl = window(dlog_sum_special);
    CHECK(dl.value < 0);
    CHECK(near50(dl.value, float50("-0.577604078382531"), float50("1e-13")));
}

TEST_CASE("special product and sum match their one variable forms") {
    Fq F(5);
    float50 logdp = 0;
    float50 dlsum = 0;
    for (int n = 1; n <= 60; ++n) {
        float50 t = pow(float50(5), -float50(n) / 3);
        float50 r = pow(t, 4) * (1 + t * t + t * t * t + pow(t, 4)) /
                    ((1 + t) * (1 + t));
        float50 h = pow(t, 5) * (1 + t + t * t) / (1 + t);
        float50 lg = r < float50("1e-35") ? -r * (1 + r / 2) : log(1 - r);
        logdp += pi50(F, n) * lg;
        dlsum += pi50(F, n) * n * h;
    }
    BoundedReal dp = dproduct_special(F, 20);
    BoundedReal dl = dlog_sum_special(F, 20);
    CHECK(near50(dp.value, exp(logdp), float50("1e-26")));
    CHECK(near50(dl.value, -dlsum, float50("1e-42")));
}

TEST_CASE("special product factors are the bivariate local factors") {
    Fq F(5);
    float50 z0 = pow(float50(5), float50(-4) / 3);
    float50 w0 = pow(float50(5), float50(-1) / 3);
    for (int n = 1; n <= 6; ++n) {
        float50 t = pow(float50(5), -float50(n) / 3);
        float50 r = pow(t, 4) * (1 + t * t + t * t * t + pow(t, 4)) /
                    ((1 + t) * (1 + t));
        CHECK(near50(dp_local50(F, n, z0, w0), 1 - r, float50("1e-45")));
    }
}

TEST_CASE("local factor identity between the two euler products") {
    Fq F(5);
    for (auto [z, w] : {std::pair<double, double>{0.05, 0.02},
                        std::pair<double, double>{0.06, 0.01}}) {
        for (int n = 1; n <= 6; ++n) {
            double corr = 1.0 - std::pow(w / (25.0 * z), n);
            double rhs =
                (1.0 - std::pow(w, 2 * n)) * dp_local(F, n, z, w) / corr;
            CHECK(near(bp_local(F, n, z, w), rhs, 1e-12));
        }
    }
}

TEST_CASE("secondary coefficients and prediction shape") {
    Fq F(5);
    RCoeffs rc = r_polynomial(F, 20);
    CHECK(near50(rc.c0.value, float50("-0.00883250186616472"), float50("1e-12")));
    CHECK(near50(rc.c1.value, float50("0.00313811023607238"), float50("1e-12")));

    const double mains[] = {201.005138974244, 7096.86405329948,
                            229214.990806072};
    const double secs[] = {0.00290914421026213, 0.100265289221256,
                           0.56148213529518};
    double y[3];
    for (int g = 1; g <= 3; ++g) {
        MomentPrediction mp = predict_moment(F, g, 20);
        double main = static_cast<double>(mp.main.value);
        double sec = static_cast<double>(mp.secondary.value);
        CHECK(near(main, mains[g - 1], 1e-12));
        CHECK(near(sec, secs[g - 1], 1e-12));
        CHECK(main > 0);
        CHECK(static_cast<double>(mp.error_scale) ==
              doctest::Approx(std::pow(5.0, g / 2.0)).epsilon(1e-14));
        y[g - 1] = sec / std::pow(5.0, (2.0 * g + 1) / 3.0);
    }
    double slope12 = (y[1] - y[0]) / 2.0;
    double slope23 = (y[2] - y[1]) / 2.0;
    CHECK(near(slope12, slope23, 1e-9));
    CHECK(near(slope12, static_cast<double>(rc.c1.value), 1e-9));
    CHECK_THROWS_AS(predict_moment(F, 0, 20), std::invalid_argument);
}

TEST_CASE("generating identity at pinned points") {
    Fq F(5);
    BzwCheck p1 = bzw_identity_check(F, 0.05, 0.02, 10);
    CHECK(p1.delta <= 1e-6);
    CHECK(near(p1.lhs, 2.12782502214765, 1e-12));
    CHECK(near(p1.rhs, 2.12782549866943, 1e-12));
    BzwCheck p2 = bzw_identity_check(F, 0.048, 0.025, 12);
    CHECK(p2.delta <= 1e-6);
    double prev = 1e9;
    for (int trunc : {6, 8, 10}) {
        BzwCheck c = bzw_identity_check(F, 0.05, 0.02, trunc);
        CHECK(c.delta < prev);
        prev = c.delta;
    }
}

TEST_CASE("grouped series evaluation matches literal enumeration") {
    Fq F(5);
    for (auto [z, w] : {std::pair<double, double>{0.05, 0.02},
                        std::pair<double, double>{0.06, 0.015}}) {
        for (int trunc : {3, 4}) {
            double lit = bzw_lhs_literal(F, z, w, trunc);
            double grp = bzw_lhs_grouped(F, z, w, trunc);
            CHECK(near(lit, grp, 1e-12));
        }
    }
}

TEST_CASE("vanishing second variable reduces to the zeta truncation") {
    Fq F(5);
    double got = bzw_lhs_grouped(F, 0.05, 0.0, 8);
    double expect = 0;
    double term = 1;
    for (int n = 0; n <= 8; ++n) {
        expect += term;
        term *= 5 * 0.05;
    }
    CHECK(near(got, expect, 1e-14));
}

TEST_CASE("region and truncation validation") {
    Fq F(5);
    CHECK_THROWS_AS(bzw_identity_check(F, 0.03, 0.2, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_identity_check(F, 0.2, 0.5, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_identity_check(F, 1.2, 0.3, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_identity_check(F, 0.03, 0.02, 6),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_identity_check(F, 0.05, 0.02, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_lhs_grouped(F, 0.05, 0.02, 41),
                    std::invalid_argument);
    CHECK_THROWS_AS(bzw_lhs_literal(F, 0.05, 0.02, 7),
                    std::invalid_argument);
}

TEST_CASE("interval arithmetic propagates bounds") {
    Fq F(5);
    BoundedReal third = br_exact(rational(1, 3));
    CHECK(third.bound > 0);
    BoundedReal exact = br_exact(rational(3, 4));
    CHECK(exact.bound == 0);
    BoundedReal sum = br_add(third, exact);
    CHECK(sum.bound >= third.bound);
    BoundedReal prod = br_mul(third, third);
    CHECK(near50(prod.value, float50(1) / 9, float50("1e-45")));
    BoundedReal wide{float50(0), float50(1)};
    CHECK_THROWS_AS(br_div(exact, wide), std::domain_error);
}

}
