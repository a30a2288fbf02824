#include "doctest.h"

#include "ffmom/charsum.hpp"
#include "ffmom/cyclo.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/factor.hpp"
#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

#include <random>
#include <vector>

using namespace ffmom;

namespace {

Poly rand_poly(const Fq& F, std::mt19937& rng, int maxdeg, bool monic) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    int d = dd(rng);
    std::uniform_int_distribution<int64_t> dc(0, F.q() - 1);
    std::uniform_int_distribution<int64_t> dl(1, F.q() - 1);
    std::vector<int64_t> c(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = dc(rng);
    }
    c[static_cast<std::size_t>(d)] = monic ? 1 : dl(rng);
    return Poly::from_coeffs(F, c);
}

Poly residue_of_index(const Fq& F, int slots, uint64_t idx) {
    std::vector<int64_t> c(static_cast<std::size_t>(slots), 0);
    for (int i = 0; i < slots; ++i) {
        c[static_cast<std::size_t>(i)] =
            static_cast<int64_t>(idx % static_cast<uint64_t>(F.q()));
        idx /= static_cast<uint64_t>(F.q());
    }
    return Poly::from_coeffs(F, c);
}

int euler_symbol(const Fq& F, const Poly& A, const Poly& P) {
    uint64_t size = 1;
    for (int i = 0; i < P.deg(); ++i) {
        size *= static_cast<uint64_t>(F.q());
    }
    Poly r = pow_mod(F, mod(F, A, P), (size - 1) / 2, P);
    if (r.is_zero()) {
        return 0;
    }
    if (r == Poly::one()) {
        return 1;
    }
    REQUIRE(r == Poly::constant(static_cast<int32_t>(F.q()) - 1));
    return -1;
}

}  // namespace

TEST_SUITE("charsum") {

TEST_CASE("quadratic residue symbol matches the euler criterion") {
    Fq F(5);
    for (int n = 1; n <= 2; ++n) {
        for (const Poly& P : irreducible_table(F, n)) {
            uint64_t residues = 1;
            for (int i = 0; i < n; ++i) {
                residues *= 5;
            }
            for (uint64_t v = 0; v < residues; ++v) {
                Poly A = residue_of_index(F, n, v);
                CHECK(jacobi_symbol(F, A, P) == euler_symbol(F, A, P));
            }
        }
    }
}

TEST_CASE("symbol is multiplicative in the argument") {
    Fq F(5);
    std::mt19937 rng(31);
    for (int it = 0; it < 300; ++it) {
        Poly A = rand_poly(F, rng, 4, false);
        Poly B = rand_poly(F, rng, 4, false);
        Poly Q = rand_poly(F, rng, 4, true);
        if (Q.deg() < 1) {
            continue;
        }
        CHECK(jacobi_symbol(F, mul(F, A, B), Q) ==
              jacobi_symbol(F, A, Q) * jacobi_symbol(F, B, Q));
    }
}

TEST_CASE("symbol is multiplicative in the modulus") {
    Fq F(5);
    std::mt19937 rng(37);
    for (int it = 0; it < 300; ++it) {
        Poly A = rand_poly(F, rng, 4, false);
        Poly Q1 = rand_poly(F, rng, 3, true);
        Poly Q2 = rand_poly(F, rng, 3, true);
        if (Q1.deg() < 1 || Q2.deg() < 1) {
            continue;
        }
        CHECK(jacobi_symbol(F, A, mul(F, Q1, Q2)) ==
              jacobi_symbol(F, A, Q1) * jacobi_symbol(F, A, Q2));
    }
}

TEST_CASE("reciprocity is signless for monic arguments") {
    Fq F(5);
    std::mt19937 rng(41);
    int checked = 0;
    while (checked < 200) {
        Poly f = rand_poly(F, rng, 4, true);
        Poly g = rand_poly(F, rng, 4, true);
        if (f.deg() < 1 || g.deg() < 1 || gcd(F, f, g) != Poly::one()) {
            continue;
        }
        CHECK(jacobi_symbol(F, f, g) == jacobi_symbol(F, g, f));
        ++checked;
    }
    Fq G(13);
    std::mt19937 rng13(43);
    checked = 0;
    while (checked < 100) {
        Poly f = rand_poly(G, rng13, 3, true);
        Poly g = rand_poly(G, rng13, 3, true);
        if (f.deg() < 1 || g.deg() < 1 || gcd(G, f, g) != Poly::one()) {
            continue;
        }
        CHECK(jacobi_symbol(G, f, g) == jacobi_symbol(G, g, f));
        ++checked;
    }
}

TEST_CASE("constants factor through the base quadratic character") {
    Fq F(5);
    for (int n = 1; n <= 3; ++n) {
        for (const Poly& P : irreducible_table(F, n)) {
            for (int32_t c = 1; c < 5; ++c) {
                int expect = 1;
                for (int i = 0; i < n; ++i) {
                    expect *= F.eta(c);
                }
                CHECK(jacobi_symbol(F, Poly::constant(c), P) == expect);
            }
        }
    }
}

TEST_CASE("additive character exponent") {
    Fq F(5);
    Poly x2 = from_string(F, "0,0,1");
    for (int32_t c = 0; c < 5; ++c) {
        for (int32_t d = 0; d < 5; ++d) {
            Poly A = Poly::from_coeffs(F, {d, c});
            CHECK(exp_eval(F, A, x2) == c);
        }
        CHECK(exp_eval(F, Poly::constant(c), Poly::x()) == c);
    }
    std::mt19937 rng(47);
    for (int it = 0; it < 200; ++it) {
        Poly A = rand_poly(F, rng, 5, false);
        Poly B = rand_poly(F, rng, 5, false);
        Poly H = rand_poly(F, rng, 3, true);
        if (H.deg() < 1) {
            continue;
        }
        CHECK(exp_eval(F, add(F, A, B), H) ==
              F.add(exp_eval(F, A, H), exp_eval(F, B, H)));
        CHECK(exp_eval(F, mul(F, A, H), H) == 0);
    }
}

TEST_CASE("gauss sums agree between defining sum and closed form") {
    Fq F(5);
    for (int n = 1; n <= 2; ++n) {
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            uint64_t residues = 1;
            for (int j = 0; j < n; ++j) {
                residues *= 5;
            }
            for (uint64_t v = 0; v < residues; ++v) {
                Poly V = residue_of_index(F, n, v);
                QuadExt direct =
                    reduce_to_quadext(F, gauss_sum_direct(F, V, f));
                CHECK(direct == gauss_sum_fast(F, V, f));
            }
        }
    }
}

TEST_CASE("gauss sum of a prime modulus at trivial argument") {
    Fq F(5);
    for (int n = 1; n <= 3; ++n) {
        for (const Poly& P : irreducible_table(F, n)) {
            QuadExt g = gauss_sum_fast(F, Poly::one(), P);
            int64_t half = 1;
            for (int i = 0; i < n / 2; ++i) {
                half *= 5;
            }
            QuadExt expect = (n % 2 == 1)
                                 ? QuadExt(rational(0), rational(half))
                                 : QuadExt(rational(half), rational(0));
            CHECK(g == expect);
        }
    }
}

TEST_CASE("gauss sum scaling covariance") {
    Fq F(5);
    std::mt19937 rng(53);
    for (int it = 0; it < 150; ++it) {
        Poly f = rand_poly(F, rng, 3, true);
        if (f.deg() < 1) {
            continue;
        }
        Poly V = rand_poly(F, rng, 3, false);
        std::uniform_int_distribution<int32_t> dc(1, 4);
        int32_t c = dc(rng);
        int sign = 1;
        for (int i = 0; i < f.deg(); ++i) {
            sign *= F.eta(c);
        }
        QuadExt lhs = gauss_sum_fast(F, mul_scalar(F, V, c), f);
        QuadExt rhs = gauss_sum_fast(F, V, f);
        if (sign == -1) {
            rhs = qe_neg(rhs);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("gauss sum prime power ladder") {
    Fq F(5);
    Poly P = Poly::x();
    Poly P2 = mul(F, P, P);
    Poly P3 = mul(F, P2, P);
    CHECK(gauss_sum_fast(F, Poly::one(), P2) == QuadExt::integer(0));
    CHECK(gauss_sum_fast(F, P2, P2) == QuadExt::integer(20));
    CHECK(gauss_sum_fast(F, P, P2) == QuadExt::integer(-5));
    CHECK(gauss_sum_fast(F, Poly::one(), P3) == QuadExt::integer(0));
    CHECK(gauss_sum_fast(F, P3, P3) == QuadExt::integer(0));
    CHECK(gauss_sum_fast(F, P2, P3) == QuadExt(rational(0), rational(25)));
    CHECK(gauss_sum_fast(F, Poly::zero(), P2) == QuadExt::integer(20));
    CHECK(gauss_sum_fast(F, Poly::zero(), P) == QuadExt::integer(0));
}

TEST_CASE("cyclotomic reduction decodes and rejects") {
    Fq F(5);
    CycloInt balanced(5);
    balanced.c = {2, 3, 3, 3, 3};
    CHECK(reduce_to_quadext(F, balanced) == QuadExt::integer(-1));
    CycloInt gshape(5);
    gshape.c = {0, 3, 1, 1, 3};
    CHECK(reduce_to_quadext(F, gshape) == QuadExt(rational(-2), rational(1)));
    CycloInt skew(5);
    skew.c = {0, 1, 0, 0, 2};
    CHECK_THROWS_AS(reduce_to_quadext(F, skew), std::domain_error);
    CycloInt wrongsize(7);
    CHECK_THROWS_AS(reduce_to_quadext(F, wrongsize), std::invalid_argument);
}

TEST_CASE("dual character sum evaluation including large cutoffs") {
    Fq F(5);
    for (int n = 1; n <= 3; ++n) {
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            for (int m = 0; m <= n + 1; ++m) {
                PoissonCheck pc = poisson_check(F, f, m);
                CHECK(pc.equal);
            }
        }
    }
    Poly sq = from_string(F, "1,2,1");
    PoissonCheck big = poisson_check(F, sq, 3);
    CHECK(big.equal);
    CHECK(big.lhs == QuadExt::integer(100));
    Poly nonsq = from_string(F, "1,1,1");
    PoissonCheck zero = poisson_check(F, nonsq, 4);
    CHECK(zero.equal);
    CHECK(zero.lhs == QuadExt::integer(0));
}

}
