#include "ffmom/asym.hpp"
#include "ffmom/charsum.hpp"
#include "ffmom/cyclo.hpp"
#include "ffmom/ensemble.hpp"
#include "ffmom/enumerate.hpp"
#include "ffmom/factor.hpp"
#include "ffmom/lfunc.hpp"
#include "ffmom/poly.hpp"
#include "ffmom/quadext.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace ffmom;
using nlohmann::json;

constexpr double kBzwTol = 1e-6;

struct Sink {
    std::ofstream file;
    std::ostream* os = &std::cout;

    bool open(const std::string& path) {
        if (path.empty()) {
            return true;
        }
        file.open(path);
        if (!file) {
            std::cerr << "cannot open output file " << path << "\n";
            return false;
        }
        os = &file;
        return true;
    }
    std::ostream& out() { return *os; }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string r = "\"";
    for (char c : s) {
        if (c == '"') {
            r += '"';
        }
        r += c;
    }
    r += '"';
    return r;
}

std::string dec15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

int check_q(int64_t q) {
    if (!Fq::is_valid_modulus(q)) {
        std::cerr << "q must be a prime ≡ 1 mod 4\n";
        return 2;
    }
    return 0;
}

unsigned resolve_threads(int cli_threads) {
    if (cli_threads > 0) {
        return static_cast<unsigned>(cli_threads);
    }
    if (const char* env = std::getenv("FFMOM_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) {
            return static_cast<unsigned>(v);
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

bool parse_grange(const std::string& s, int& lo, int& hi) {
    auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(s);
        } else {
            lo = std::stoi(s.substr(0, dots));
            hi = std::stoi(s.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return lo >= 1 && hi >= lo;
}

Poly residue_of_index(const Fq& F, int deg_mod, uint64_t idx) {
    std::vector<int64_t> c(static_cast<std::size_t>(deg_mod), 0);
    for (int i = 0; i < deg_mod; ++i) {
        c[static_cast<std::size_t>(i)] =
            static_cast<int64_t>(idx % static_cast<uint64_t>(F.q()));
        idx /= static_cast<uint64_t>(F.q());
    }
    return Poly::from_coeffs(F, c);
}

json br_json(const BoundedReal& x) {
    return {{"value", float_to_string15(x.value)},
            {"bound", float_to_string15(x.bound)}};
}

int cmd_verify_gauss(int64_t q, int maxdeg, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "f,V,direct_a,direct_b,fast_a,fast_b,equal\n";
    std::vector<std::string> failures;
    for (int n = 1; n <= maxdeg; ++n) {
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            uint64_t residues = 1;
            for (int j = 0; j < n; ++j) {
                residues *= static_cast<uint64_t>(q);
            }
            for (uint64_t v = 0; v < residues; ++v) {
                Poly V = residue_of_index(F, n, v);
                QuadExt direct = reduce_to_quadext(F, gauss_sum_direct(F, V, f));
                QuadExt fast = gauss_sum_fast(F, V, f);
                bool ok = direct == fast;
                sink.out() << csv_field(to_string(f)) << ','
                           << csv_field(to_string(V)) << ','
                           << rat_to_string(direct.a) << ','
                           << rat_to_string(direct.b) << ','
                           << rat_to_string(fast.a) << ','
                           << rat_to_string(fast.b) << ','
                           << (ok ? 1 : 0) << '\n';
                if (!ok) {
                    failures.push_back("f=" + to_string(f) + " V=" + to_string(V));
                }
            }
        }
    }
    if (!failures.empty()) {
        std::cerr << "gauss verification failed on " << failures.size()
                  << " inputs:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_verify_poisson(int64_t q, int maxdeg, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "f,m,lhs_a,lhs_b,rhs_a,rhs_b,equal\n";
    std::vector<std::string> failures;
    for (int n = 1; n <= maxdeg; ++n) {
        for (uint64_t i = 0; i < monic_count(F, n); ++i) {
            Poly f = monic_of_index(F, n, i);
            for (int m = 0; m <= n; ++m) {
                PoissonCheck pc = poisson_check(F, f, m);
                sink.out() << csv_field(to_string(f)) << ',' << m << ','
                           << rat_to_string(pc.lhs.a) << ','
                           << rat_to_string(pc.lhs.b) << ','
                           << rat_to_string(pc.rhs.a) << ','
                           << rat_to_string(pc.rhs.b) << ','
                           << (pc.equal ? 1 : 0) << '\n';
                if (!pc.equal) {
                    failures.push_back("f=" + to_string(f) +
                                       " m=" + std::to_string(m));
                }
            }
        }
    }
    if (!failures.empty()) {
        std::cerr << "poisson verification failed on " << failures.size()
                  << " inputs:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_verify_fe(int64_t q, int g, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "D,pass\n";
    std::vector<std::string> failures;
    for (const Poly& D : enumerate(F, PolyClass::SquarefreeMonic, 2 * g + 1)) {
        LPolynomial L = l_polynomial_charsum_direct(F, D);
        bool ok = fe_check(F, L);
        sink.out() << csv_field(to_string(D)) << ',' << (ok ? 1 : 0) << '\n';
        if (!ok) {
            failures.push_back("D=" + to_string(D));
        }
    }
    if (!failures.empty()) {
        std::cerr << "functional-equation verification failed on "
                  << failures.size() << " inputs:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_verify_rh(int64_t q, int g, double tol, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "D,max_deviation,pass\n";
    std::vector<std::string> failures;
    for (const Poly& D : enumerate(F, PolyClass::SquarefreeMonic, 2 * g + 1)) {
        LPolynomial L = l_polynomial_charsum(F, D);
        RhCheck rc = rh_check(F, L, tol);
        sink.out() << csv_field(to_string(D)) << ','
                   << dec15(rc.max_deviation) << ',' << (rc.pass ? 1 : 0)
                   << '\n';
        if (!rc.pass) {
            failures.push_back("D=" + to_string(D));
        }
    }
    if (!failures.empty()) {
        std::cerr << "riemann-hypothesis verification failed on "
                  << failures.size() << " inputs:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_verify_firstpoint(int64_t q, int maxdeg, int glo, int ghi,
                          const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "f,g,lhs,rhs,equal\n";
    std::vector<std::string> failures;
    for (int g = glo; g <= ghi; ++g) {
        for (int n = 1; n <= maxdeg; ++n) {
            for (uint64_t i = 0; i < monic_count(F, n); ++i) {
                Poly f = monic_of_index(F, n, i);
                FirstpointCheck fp = firstpoint_check(F, f, g);
                sink.out() << csv_field(to_string(f)) << ',' << g << ','
                           << fp.lhs << ',' << fp.rhs << ','
                           << (fp.equal ? 1 : 0) << '\n';
                if (!fp.equal) {
                    failures.push_back("f=" + to_string(f) +
                                       " g=" + std::to_string(g));
                }
            }
        }
    }
    if (!failures.empty()) {
        std::cerr << "ensemble character-sum verification failed on "
                  << failures.size() << " inputs:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_verify_bzw(int64_t q, double z, double w, int trunc,
                   const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    struct Point {
        double z, w;
        int trunc;
    };
    std::vector<Point> points;
    if (z > 0 || w > 0) {
        points.push_back({z, w, trunc});
    } else {
        points.push_back({0.05, 0.02, 10});
        points.push_back({0.048, 0.025, 12});
    }
    sink.out() << "z,w,trunc,lhs,rhs,delta,pass\n";
    std::vector<std::string> failures;
    for (const Point& p : points) {
        BzwCheck bc;
        try {
            bc = bzw_identity_check(F, p.z, p.w, p.trunc);
        } catch (const std::invalid_argument& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        bool ok = bc.delta <= kBzwTol;
        sink.out() << dec15(p.z) << ',' << dec15(p.w) << ',' << p.trunc << ','
                   << dec15(bc.lhs) << ',' << dec15(bc.rhs) << ','
                   << dec15(bc.delta) << ',' << (ok ? 1 : 0) << '\n';
        if (!ok) {
            failures.push_back("z=" + dec15(p.z) + " w=" + dec15(p.w) +
                               " trunc=" + std::to_string(p.trunc) +
                               " delta=" + dec15(bc.delta));
        }
    }
    if (!failures.empty()) {
        std::cerr << "generating-function identity check failed on "
                  << failures.size() << " points:\n";
        for (const std::string& s : failures) {
            std::cerr << "  " << s << "\n";
        }
        return 1;
    }
    return 0;
}

int cmd_lvalue(int64_t q, const std::string& dstr, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    Poly D;
    LPolynomial L;
    try {
        D = from_string(F, dstr);
        L = l_polynomial_charsum(F, D);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    QuadExt lh = l_eval_at_half(F, L);
    RhCheck rc = rh_check(F, L, 1e-9);
    json j;
    j["q"] = q;
    j["D"] = to_string(D);
    j["genus"] = L.genus();
    j["S"] = L.s;
    j["L_half"] = {{"a", rat_to_string(lh.a)},
                   {"b", rat_to_string(lh.b)},
                   {"decimal", dec15(qe_to_double(q, lh))}};
    j["fe_pass"] = fe_check(F, L);
    j["rh"] = {{"pass", rc.pass},
               {"max_deviation", dec15(rc.max_deviation)},
               {"converged", rc.converged}};
    sink.out() << j.dump(2) << "\n";
    return 0;
}

int cmd_moment(int64_t q, int g, unsigned k, int threads,
               const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    MomentResult mr;
    try {
        mr = first_moment(F, g, k, resolve_threads(threads));
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    sink.out() << "q,g,k,count,moment_a_num,moment_a_den,moment_b_num,"
                  "moment_b_den,moment_decimal,wall_seconds,threads\n";
    sink.out() << mr.q << ',' << mr.g << ',' << mr.k << ',' << mr.count << ','
               << numerator(mr.moment.a).str() << ','
               << denominator(mr.moment.a).str() << ','
               << numerator(mr.moment.b).str() << ','
               << denominator(mr.moment.b).str() << ','
               << dec15(qe_to_double(q, mr.moment)) << ','
               << dec15(mr.wall_seconds) << ',' << mr.threads << '\n';
    return 0;
}

int cmd_constants(int64_t q, int cutoff, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    json j;
    j["q"] = q;
    j["cutoff"] = cutoff;
    try {
        j["C1"] = br_json(constant_C1(F, cutoff));
        j["CprimeC_over_logq"] = br_json(constant_CprimeC_over_logq(F, cutoff));
        j["dproduct"] = br_json(dproduct_special(F, cutoff));
        j["dlogsum"] = br_json(dlog_sum_special(F, cutoff));
        j["zeta"] = {{"2", br_json(zeta_q(F, rational(2)))},
                     {"4/3", br_json(zeta_q(F, rational(4, 3)))},
                     {"5/3", br_json(zeta_q(F, rational(5, 3)))},
                     {"7/3", br_json(zeta_q(F, rational(7, 3)))}};
        RCoeffs rc = r_polynomial(F, cutoff);
        j["R_coeffs"] = {{"c0", br_json(rc.c0)}, {"c1", br_json(rc.c1)}};
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    sink.out() << j.dump(2) << "\n";
    return 0;
}

int cmd_predict(int64_t q, int g, int cutoff, const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    json j;
    try {
        MomentPrediction mp = predict_moment(F, g, cutoff);
        j["q"] = q;
        j["g"] = g;
        j["main"] = br_json(mp.main);
        j["secondary"] = br_json(mp.secondary);
        j["error_scale"] = float_to_string15(mp.error_scale);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    sink.out() << j.dump(2) << "\n";
    return 0;
}

int cmd_report(int64_t q, const std::string& grange, int threads, int cutoff,
               const std::string& outpath) {
    if (int rc = check_q(q)) {
        return rc;
    }
    int glo = 0, ghi = 0;
    if (!parse_grange(grange, glo, ghi)) {
        std::cerr << "invalid --g range: " << grange << "\n";
        return 2;
    }
    Fq F(q);
    Sink sink;
    if (!sink.open(outpath)) {
        return 2;
    }
    sink.out() << "g,measured,predicted_main,predicted_secondary,residual,"
                  "residual_over_q^0.55g,ratio\n";
    unsigned th = resolve_threads(threads);
    for (int g = glo; g <= ghi; ++g) {
        MomentResult mr;
        MomentPrediction mp;
        try {
            mr = first_moment(F, g, 1, th);
            mp = predict_moment(F, g, cutoff);
        } catch (const std::exception& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
        double measured = qe_to_double(q, mr.moment);
        double main_t = static_cast<double>(mp.main.value);
        double sec_t = static_cast<double>(mp.secondary.value);
        double residual = measured - main_t - sec_t;
        double scale = std::pow(static_cast<double>(q), 0.55 * g);
        sink.out() << g << ',' << dec15(measured) << ',' << dec15(main_t)
                   << ',' << dec15(sec_t) << ',' << dec15(residual) << ','
                   << dec15(residual / scale) << ','
                   << dec15(measured / main_t) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic laboratory for quadratic Dirichlet "
                 "L-functions over F_q[x]"};
    app.require_subcommand(1);

    int64_t q = 5;
    int maxdeg = 4;
    int g = 1;
    int glo = 1;
    int trunc = 10;
    int cutoff = 30;
    int threads = 0;
    unsigned k = 1;
    double tol = 1e-9;
    double z = 0, w = 0;
    std::string dstr, grange = "1..3", outpath;

    CLI::App* verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);

    CLI::App* vgauss = verify->add_subcommand(
        "gauss", "direct cyclotomic Gauss sums against the prime-power "
                 "evaluation, all V mod f");
    vgauss->add_option("--q", q, "field size")->capture_default_str();
    vgauss->add_option("--max-deg", maxdeg, "largest d(f)")->default_val(3);
    vgauss->add_option("--out", outpath, "output CSV path");

    CLI::App* vpoisson = verify->add_subcommand(
        "poisson", "character sums over M_m against the dual Gauss-sum side");
    vpoisson->add_option("--q", q, "field size")->capture_default_str();
    vpoisson->add_option("--max-deg", maxdeg, "largest d(f)")
        ->capture_default_str();
    vpoisson->add_option("--out", outpath, "output CSV path");

    CLI::App* vfe = verify->add_subcommand(
        "fe", "functional equation on directly computed L-coefficients");
    vfe->add_option("--q", q, "field size")->capture_default_str();
    vfe->add_option("--g", g, "genus; runs all D in H_{2g+1}")
        ->capture_default_str();
    vfe->add_option("--out", outpath, "output CSV path");

    CLI::App* vrh = verify->add_subcommand(
        "rh", "all L-roots on the circle |u| = q^(-1/2)");
    vrh->add_option("--q", q, "field size")->capture_default_str();
    vrh->add_option("--g", g, "genus; runs all D in H_{2g+1}")
        ->capture_default_str();
    vrh->add_option("--tol", tol, "radius tolerance")->capture_default_str();
    vrh->add_option("--out", outpath, "output CSV path");

    CLI::App* vfp = verify->add_subcommand(
        "firstpoint", "ensemble character sum against the divisor-sieve "
                      "dual side");
    vfp->add_option("--q", q, "field size")->capture_default_str();
    vfp->add_option("--max-deg", maxdeg, "largest d(f)")->default_val(3);
    vfp->add_option("--g", glo, "genus")->capture_default_str();
    int vfp_ghi = 0;
    vfp->add_option("--g-max", vfp_ghi, "run genera g..g-max (default: --g)");
    vfp->add_option("--out", outpath, "output CSV path");

    CLI::App* vbzw = verify->add_subcommand(
        "bzw", "bivariate generating identity at sample points");
    vbzw->add_option("--q", q, "field size")->capture_default_str();
    vbzw->add_option("--z", z, "sample z (with --w; default: pinned points)");
    vbzw->add_option("--w", w, "sample w");
    vbzw->add_option("--trunc", trunc, "truncation degree")
        ->capture_default_str();
    vbzw->add_option("--out", outpath, "output CSV path");

    CLI::App* lvalue = app.add_subcommand(
        "lvalue", "exact L(1/2, chi_D) for one discriminant");
    lvalue->add_option("--q", q, "field size")->capture_default_str();
    lvalue->add_option("--D", dstr, "monic squarefree D, odd degree, as "
                                    "comma-separated coefficients c0,c1,...")
        ->required();
    lvalue->add_option("--out", outpath, "output JSON path");

    CLI::App* moment = app.add_subcommand(
        "moment", "exact ensemble sum of L(1/2)^k over H_{2g+1}");
    moment->add_option("--q", q, "field size")->capture_default_str();
    moment->add_option("--g", g, "genus")->required();
    moment->add_option("--k", k, "moment power")->capture_default_str();
    moment->add_option("--threads", threads,
                       "worker count (0: FFMOM_THREADS or hardware)")
        ->capture_default_str();
    moment->add_option("--out", outpath, "output CSV path");

    CLI::App* constants = app.add_subcommand(
        "constants", "certified Euler-product constants");
    constants->add_option("--q", q, "field size")->capture_default_str();
    constants->add_option("--cutoff", cutoff, "degree cutoff")
        ->capture_default_str();
    constants->add_option("--out", outpath, "output JSON path");

    CLI::App* predict = app.add_subcommand(
        "predict", "predicted first moment for one genus");
    predict->add_option("--q", q, "field size")->capture_default_str();
    predict->add_option("--g", g, "genus")->required();
    predict->add_option("--cutoff", cutoff, "degree cutoff")
        ->capture_default_str();
    predict->add_option("--out", outpath, "output JSON path");

    CLI::App* report = app.add_subcommand(
        "report", "measured vs predicted moments across genera");
    report->add_option("--q", q, "field size")->capture_default_str();
    report->add_option("--g", grange, "genus range, e.g. 1..3")
        ->capture_default_str();
    report->add_option("--threads", threads,
                       "worker count (0: FFMOM_THREADS or hardware)")
        ->capture_default_str();
    report->add_option("--cutoff", cutoff, "degree cutoff")
        ->capture_default_str();
    report->add_option("--out", outpath, "output CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (vgauss->parsed()) {
        return cmd_verify_gauss(q, maxdeg, outpath);
    }
    if (vpoisson->parsed()) {
        return cmd_verify_poisson(q, maxdeg, outpath);
    }
    if (vfe->parsed()) {
        return cmd_verify_fe(q, g, outpath);
    }
    if (vrh->parsed()) {
        return cmd_verify_rh(q, g, tol, outpath);
    }
    if (vfp->parsed()) {
        int ghi = vfp_ghi >= glo ? vfp_ghi : glo;
        return cmd_verify_firstpoint(q, maxdeg, glo, ghi, outpath);
    }
    if (vbzw->parsed()) {
        return cmd_verify_bzw(q, z, w, trunc, outpath);
    }
    if (lvalue->parsed()) {
        return cmd_lvalue(q, dstr, outpath);
    }
    if (moment->parsed()) {
        return cmd_moment(q, g, k, threads, outpath);
    }
    if (constants->parsed()) {
        return cmd_constants(q, cutoff, outpath);
    }
    if (predict->parsed()) {
        return cmd_predict(q, g, cutoff, outpath);
    }
    if (report->parsed()) {
        return cmd_report(q, grange, threads, cutoff, outpath);
    }
    return 2;
}
