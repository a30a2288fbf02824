#include "ffmom/asym.hpp"
#include "ffmom/charsum.hpp"
#include "ffmom/cyclo.hpp"
#include "ffmom/ensemble.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/lfunc.hpp"
#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace ffmom;

namespace {

constexpr double kRhTol = 1e-9;
constexpr double kBzwTol = 1e-6;
constexpr double kTrendTol = 0.02;
constexpr double kConstAgreeTol = 1e-12;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += why;
    }
};

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
    if (r == Poly::constant(static_cast<int32_t>(F.q()) - 1)) {
        return -1;
    }
    return 2;
}

Outcome criterion_jacobi(const Fq& F) {
    Outcome o;
    uint64_t checked = 0;
    for (int n = 1; n <= 3; ++n) {
        for (const Poly& P : irreducible_table(F, n)) {
            for (uint64_t v = 0; v < 625; ++v) {
                Poly A = residue_of_index(F, 4, v);
                int want = euler_symbol(F, A, P);
                int got = jacobi_symbol(F, A, P);
                ++checked;
                if (want != got) {
                    o.fail("mismatch at f=" + to_string(A) +
                           " P=" + to_string(P));
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " symbol comparisons";
    return o;
}

Outcome criterion_gauss(const Fq& F) {
    Outcome o;
    uint64_t checked = 0;
    for (int n = 1; n <= 3; ++n) {
        uint64_t residues = 1;
        for (int i = 0; i < n; ++i) {
            residues *= static_cast<uint64_t>(F.q());
        }
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            for (uint64_t v = 0; v < residues; ++v) {
                Poly V = residue_of_index(F, n, v);
                QuadExt direct =
                    reduce_to_quadext(F, gauss_sum_direct(F, V, f));
                QuadExt fast = gauss_sum_fast(F, V, f);
                ++checked;
                if (!(direct == fast)) {
                    o.fail("mismatch at f=" + to_string(f) +
                           " V=" + to_string(V));
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " exact sum comparisons";
    return o;
}

Outcome criterion_poisson(const Fq& F) {
    Outcome o;
    uint64_t checked = 0;
    for (int n = 1; n <= 4; ++n) {
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            for (int m = 0; m < n; ++m) {
                PoissonCheck pc = poisson_check(F, f, m);
                ++checked;
                if (!pc.equal) {
                    o.fail("mismatch at f=" + to_string(f) +
                           " m=" + std::to_string(m));
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " dual evaluations";
    return o;
}

Outcome criterion_lfunc(const Fq& F) {
    Outcome o;
    std::vector<Poly> family = enumerate(F, PolyClass::SquarefreeMonic, 3);
    std::mt19937 rng(424242);
    std::uniform_int_distribution<uint64_t> pick(0, monic_count(F, 5) - 1);
    std::set<uint64_t> seen;
    while (family.size() < 300) {
        uint64_t idx = pick(rng);
        if (!seen.insert(idx).second) {
            continue;
        }
        Poly D = monic_of_index(F, 5, idx);
        if (is_squarefree(F, D)) {
            family.push_back(D);
        }
    }
    for (const Poly& D : family) {
        LPolynomial a = l_polynomial_charsum(F, D);
        LPolynomial c = l_polynomial_pointcount(F, D);
        if (a.s != c.s) {
            o.fail("route mismatch at D=" + to_string(D));
            return o;
        }
        if (!fe_check(F, l_polynomial_charsum_direct(F, D))) {
            o.fail("symmetry failure at D=" + to_string(D));
            return o;
        }
        RhCheck rc = rh_check(F, a, kRhTol);
        if (!rc.converged || !rc.pass) {
            o.fail("root radius failure at D=" + to_string(D));
            return o;
        }
        if (qe_sign(F.q(), l_half(F, D)) < 0) {
            o.fail("negative central value at D=" + to_string(D));
            return o;
        }
    }
    o.detail = std::to_string(family.size()) +
               " discriminants through both routes";
    return o;
}

Outcome criterion_firstpoint(const Fq& F) {
    Outcome o;
    uint64_t checked = 0;
    for (int g = 1; g <= 2; ++g) {
        for (int n = 1; n <= 3; ++n) {
            for (uint64_t i = 0; i < monic_count(F, n); ++i) {
                Poly f = monic_of_index(F, n, i);
                FirstpointCheck fp = firstpoint_check(F, f, g);
                ++checked;
                if (!fp.equal) {
                    o.fail("mismatch at f=" + to_string(f) +
                           " g=" + std::to_string(g));
                    return o;
                }
            }
        }
    }
    o.detail = std::to_string(checked) + " family sums";
    return o;
}

Outcome criterion_trend(const Fq& F) {
    Outcome o;
    const QuadExt frozen[] = {
        QuadExt::integer(200),
        QuadExt::integer(7096),
        QuadExt::integer(229232),
    };
    int gmax = 3;
    const char* extended = std::getenv("ACCEPT_G4");
    if (extended != nullptr && std::strcmp(extended, "1") == 0) {
        gmax = 4;
    }
    std::vector<double> rel;
    std::ostringstream trail;
    for (int g = 1; g <= gmax; ++g) {
        MomentResult mr = first_moment(F, g, 1, 1);
        MomentPrediction mp = predict_moment(F, g, 30);
        if (g <= 3 && !(mr.moment == frozen[g - 1])) {
            o.fail("moment regression at g=" + std::to_string(g) + ": " +
                   qe_to_string(mr.moment));
            return o;
        }
        if (g == 4 &&
            !(mr.moment == QuadExt(rational(35125856, 5), rational(0)))) {
            o.fail("moment regression at g=4: " + qe_to_string(mr.moment));
            return o;
        }
        double measured = qe_to_double(F.q(), mr.moment);
        double main = static_cast<double>(mp.main.value);
        double sec = static_cast<double>(mp.secondary.value);
        rel.push_back(std::abs(measured / main - 1.0));
        trail << (g > 1 ? " " : "") << "r" << g << "=" << rel.back();
        if (g == 3) {
            double with = std::abs(measured - main - sec);
            double without = std::abs(measured - main);
            trail << (with < without ? " secondary-helps" : " secondary-hurts");
        }
    }
    for (std::size_t i = 1; i < rel.size(); ++i) {
        if (!(rel[i] < rel[i - 1])) {
            o.fail("relative gap not strictly decreasing: " + trail.str());
            return o;
        }
    }
    if (!(rel[2] <= kTrendTol)) {
        o.fail("relative gap at g=3 above tolerance: " + trail.str());
        return o;
    }
    o.detail = trail.str();
    return o;
}

Outcome criterion_constants(const Fq& F) {
    Outcome o;
    struct Entry {
        const char* name;
        BoundedReal (*fn)(const Fq&, int);
    };
    const Entry entries[] = {
        {"product-at-one", constant_C1},
        {"log-derivative", constant_CprimeC_over_logq},
        {"special-product", dproduct_special},
        {"special-sum", dlog_sum_special},
    };
    for (const Entry& e : entries) {
        BoundedReal a = e.fn(F, 20);
        BoundedReal b = e.fn(F, 40);
        float50 diff = abs(a.value - b.value);
        if (diff > float50(kConstAgreeTol)) {
            o.fail(std::string(e.name) + " cutoff drift " +
                   float_to_string15(diff));
            return o;
        }
        if (diff > a.bound + b.bound) {
            o.fail(std::string(e.name) + " outside certified bounds");
            return o;
        }
    }
    o.detail = "four constants stable between cutoffs 20 and 40";
    return o;
}

Outcome criterion_bzw(const Fq& F) {
    Outcome o;
    BzwCheck p1 = bzw_identity_check(F, 0.05, 0.02, 10);
    BzwCheck p2 = bzw_identity_check(F, 0.048, 0.025, 12);
    std::ostringstream ss;
    ss << "deltas " << p1.delta << " and " << p2.delta;
    o.detail = ss.str();
    if (p1.delta > kBzwTol) {
        o.fail("first sample point off by " + std::to_string(p1.delta));
        return o;
    }
    if (p2.delta > kBzwTol) {
        o.fail("second sample point off by " + std::to_string(p2.delta));
        return o;
    }
    double prev = 1e300;
    for (int trunc : {6, 8, 10}) {
        BzwCheck c = bzw_identity_check(F, 0.05, 0.02, trunc);
        if (!(c.delta < prev)) {
            o.fail("delta not decreasing at truncation " +
                   std::to_string(trunc));
            return o;
        }
        prev = c.delta;
    }
    return o;
}

Outcome criterion_determinism(const Fq& F) {
    Outcome o;
    for (int g = 1; g <= 3; ++g) {
        MomentResult base = first_moment(F, g, 1, 1);
        for (unsigned threads : {4u, 8u}) {
            MomentResult m = first_moment(F, g, 1, threads);
            if (!(m.moment == base.moment) || m.count != base.count) {
                o.fail("thread-dependent result at g=" + std::to_string(g) +
                       " threads=" + std::to_string(threads));
                return o;
            }
        }
    }
    o.detail = "moments bit-identical across 1, 4, 8 workers";
    return o;
}

}  // namespace

int main() {
    Fq F(5);
    bool extended = false;
    if (const char* env = std::getenv("ACCEPT_G4")) {
        extended = std::strcmp(env, "1") == 0;
    }

    struct Criterion {
        const char* name;
        double budget_seconds;
        std::function<Outcome(const Fq&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {"jacobi-euler-oracle", 5, criterion_jacobi},
        {"gauss-dual-evaluation", 60, criterion_gauss},
        {"poisson-dual-sums", 120, criterion_poisson},
        {"lfunction-dual-routes", 120, criterion_lfunc},
        {"family-character-sums", 600, criterion_firstpoint},
        {"moment-trend", extended ? 7200.0 : 600.0, criterion_trend},
        {"certified-constants", 1, criterion_constants},
        {"generating-identity", 60, criterion_bzw},
        {"thread-determinism", 600, criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.fn(F);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double dt = std::chrono::duration<double>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
        if (o.pass && dt > c.budget_seconds) {
            o.fail("exceeded time budget of " +
                   std::to_string(c.budget_seconds) + "s");
        }
        if (!o.pass) {
            ++failures;
        }
        std::printf("criterion %zu %-24s %s %8.2fs  %s\n", i + 1, c.name,
                    o.pass ? "PASS" : "FAIL", dt, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n",
                criteria.size() - static_cast<std::size_t>(failures),
                criteria.size());
    return failures == 0 ? 0 : 1;
}
