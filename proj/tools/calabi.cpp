// Command-line front end: polynomial inspection, criteria checks, single
// solves, parameter-plane scans, and a built-in selftest.
//
// Exit codes: 0 criteria pass and curve solved (or plain success), 2 criteria
// fail and curve unsolved (the expected dichotomy; also selftest failure),
// 3 criteria and solver disagree, 4 degenerate class, 64 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "calabi/pipeline.hpp"
#include "calabi/serialize.hpp"

namespace {

using namespace calabi;

constexpr int kExitUsage = 64;

struct CommonOpts {
    int m = 0, n = 1, k = 1, l = 0;
    std::string p = "1", q = "1", b = "1";
    double tol = 1e-12;
    double step = 0;     // 0: b/200
    double epsilon = 0;  // 0: b*1e-3
    std::string format = "json";
    std::string out;
};

void add_param_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m", o.m, "fiber multiplicity exponent m")->envname("CALABI_M");
    cmd->add_option("--n", o.n, "base dimension n")->envname("CALABI_N");
    cmd->add_option("--k", o.k, "upper Hessian index k")->envname("CALABI_K");
    cmd->add_option("--l", o.l, "lower Hessian index l")->envname("CALABI_L");
    cmd->add_option("--p", o.p, "base-class coefficient (rational or decimal)")->envname("CALABI_P");
    cmd->add_option("--q", o.q, "fiber-class coefficient (rational or decimal)")->envname("CALABI_Q");
    cmd->add_option("--b", o.b, "ambient Kaehler parameter b > 0")->envname("CALABI_B");
}

void add_solver_options(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.tol, "corrector residual tolerance")->envname("CALABI_TOL");
    cmd->add_option("--step", o.step, "tracker step (default b/200)")->envname("CALABI_STEP");
    cmd->add_option("--epsilon", o.epsilon, "start abscissa (default b*1e-3)")->envname("CALABI_EPSILON");
    cmd->add_option("--format", o.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->envname("CALABI_FORMAT");
    cmd->add_option("--out", o.out, "output path (default stdout)")->envname("CALABI_OUT");
}

CalabiParams make_params(const CommonOpts& o) {
    CalabiParams P;
    P.m = o.m;
    P.n = o.n;
    P.k = o.k;
    P.l = o.l;
    P.p = parse_rational(o.p);
    P.q = parse_rational(o.q);
    P.b = parse_rational(o.b);
    P.validate();
    return P;
}

PipelineOptions make_options(const CommonOpts& o) {
    if (!(o.tol > 0)) throw std::invalid_argument("tol must be positive");
    if (o.step < 0) throw std::invalid_argument("step must be positive");
    if (o.epsilon < 0) throw std::invalid_argument("epsilon must be positive");
    PipelineOptions opt;
    opt.tol = o.tol;
    opt.step = o.step;
    opt.epsilon = o.epsilon;
    return opt;
}

int emit(const CommonOpts& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file '" << o.out << "'\n";
        return kExitUsage;
    }
    f << text;
    return 0;
}

int cmd_poly(const CommonOpts& o) {
    const CalabiParams P = make_params(o);
    const MuValue mu = compute_mu(P);  // DegenerateClass propagates to exit 4
    const BivariatePolynomial Gk = intersection_polynomial(P.m, P.n, P.k, P.p);
    const BivariatePolynomial Gl = intersection_polynomial(P.m, P.n, P.l, P.p);
    json j;
    j["G_k"] = to_json(Gk);
    j["G_l"] = to_json(Gl);
    j["F"] = to_json(Gk - Gl.scaled(mu.mu));
    j["mu"] = to_double(mu.mu);
    j["mu_numerator"] = to_double(mu.numerator);
    j["mu_denominator"] = to_double(mu.denominator);
    return emit(o, j.dump(2) + "\n");
}

int cmd_criteria(const CommonOpts& o) {
    const CalabiParams P = make_params(o);
    const CriteriaReport rep = classify(P);
    const int rc = emit(o, to_json(rep).dump(2) + "\n");
    if (rc != 0) return rc;
    switch (rep.verdict) {
        case Verdict::pass: return 0;
        case Verdict::degenerate: return 4;
        default: return 2;
    }
}

int cmd_solve(const CommonOpts& o) {
    const CalabiParams P = make_params(o);
    const PipelineOptions opt = make_options(o);
    const PipelineResult R = solve_instance(P, opt);
    if (R.seed && std::isfinite(R.seed_agreement) && R.seed_agreement > 1e-8)
        std::cerr << "warning: seed selector disagreement " << fmt17(R.seed_agreement) << "\n";
    if (!R.seed_error.empty()) std::cerr << "note: " << R.seed_error << "\n";
    if (R.exit_code() == 3)
        std::cerr << "DICHOTOMY VIOLATION: criteria verdict and solver outcome disagree; "
                     "this instance deserves attention\n";
    int rc;
    if (o.format == "csv") {
        std::ostringstream os;
        if (R.curve) write_curve_csv(os, *R.curve);
        else os << "x,y,yprime,residual,admissible\n";
        rc = emit(o, os.str());
    } else {
        rc = emit(o, solve_report_json(R).dump(2) + "\n");
    }
    return rc != 0 ? rc : R.exit_code();
}

struct ScanOpts {
    std::string p_min = "0.1", p_max = "2", q_min, q_max;
    int cells_p = 20, cells_q = 20;
    int jobs = 1;
};

int cmd_scan(const CommonOpts& o, const ScanOpts& s) {
    const CalabiParams base = make_params(o);
    const PipelineOptions opt = make_options(o);
    if (s.q_min.empty() || s.q_max.empty())
        throw std::invalid_argument("scan requires --q-min and --q-max");
    if (s.jobs < 1) throw std::invalid_argument("jobs must be positive");
    ScanGrid grid;
    grid.p_min = parse_rational(s.p_min);
    grid.p_max = parse_rational(s.p_max);
    grid.q_min = parse_rational(s.q_min);
    grid.q_max = parse_rational(s.q_max);
    grid.cells_p = s.cells_p;
    grid.cells_q = s.cells_q;
    grid.validate();
    const auto rows = run_scan(base, grid, opt, s.jobs);
    std::size_t violations = 0;
    for (const auto& r : rows) violations += r.dichotomy_violation ? 1 : 0;
    if (violations > 0)
        std::cerr << "DICHOTOMY VIOLATION in " << violations << " cell(s)\n";
    std::ostringstream os;
    write_scan_csv(os, rows);
    return emit(o, os.str());
}

// ---- selftest ----------------------------------------------------------

bool report(const char* name, bool ok, const std::string& detail = "") {
    std::printf("%-44s %s%s%s\n", name, ok ? "ok" : "FAIL", detail.empty() ? "" : "  ", detail.c_str());
    return ok;
}

std::vector<double> sample_in_cone(std::mt19937& rng, int dim, int k) {
    std::uniform_real_distribution<double> U(-1.0, 2.0);
    for (int tries = 0; tries < 2000; ++tries) {
        std::vector<double> v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = U(rng);
        if (in_admissible_cone(v, k)) return v;
    }
    std::vector<double> v(static_cast<std::size_t>(dim), 1.0);  // diagonal is always admissible
    return v;
}

bool selftest_cones() {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> dim_dist(2, 7);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    std::uniform_real_distribution<double> U01(0.0, 1.0);
    const int samples = 10000;
    for (int it = 0; it < samples; ++it) {
        const int dim = dim_dist(rng);
        std::vector<double> v(static_cast<std::size_t>(dim));
        for (auto& x : v) x = U(rng);
        std::uniform_int_distribution<int> rdist(1, dim - 1);
        if (newton_defect(v, rdist(rng)) < 0) return false;

        std::uniform_int_distribution<int> kdist(1, dim);
        const int k = kdist(rng);
        const auto lam = sample_in_cone(rng, dim, k);
        if (!uniform_q_positive(lam, dim - k)) return false;

        std::vector<double> bumped = lam;
        bool nonzero = false;
        for (auto& x : bumped) {
            const double d = U01(rng) < 0.5 ? 0.0 : U01(rng) + 0.01;
            x += d;
            nonzero |= d > 0;
        }
        if (!nonzero) bumped[0] += 0.5;
        if (!(sigma(k, bumped) > sigma(k, lam))) return false;
        if (k > 0 && !(hessian_quotient(bumped, k, 0) > hessian_quotient(lam, k, 0) - 1e-12)) return false;

        const auto lam2 = sample_in_cone(rng, dim, k);
        std::vector<double> mid(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i)
            mid[static_cast<std::size_t>(i)] =
                0.5 * (lam[static_cast<std::size_t>(i)] + lam2[static_cast<std::size_t>(i)]);
        const double lhs = std::pow(sigma(k, mid), 1.0 / k);
        const double rhs = 0.5 * (std::pow(sigma(k, lam), 1.0 / k) + std::pow(sigma(k, lam2), 1.0 / k));
        if (lhs < rhs - 1e-10 * (1.0 + std::abs(rhs))) return false;
    }
    return true;
}

bool selftest_polynomials() {
    std::mt19937 rng(911);
    std::uniform_int_distribution<int> mdist(0, 3), ndist(1, 3), small(-12, 12), den(1, 9);
    auto rnd_rational = [&] { return Rational(small(rng), den(rng)); };
    for (int it = 0; it < 50; ++it) {
        CalabiParams P;
        P.m = mdist(rng);
        P.n = ndist(rng);
        const int N = P.total_dim();
        P.k = std::uniform_int_distribution<int>(1, N)(rng);
        P.l = std::uniform_int_distribution<int>(0, P.k - 1)(rng);
        P.p = rnd_rational();
        P.q = rnd_rational();
        P.b = Rational(den(rng), den(rng));

        // identity between the y-partial and the weighted symmetric function
        const Rational x = Rational(1 + den(rng), den(rng));
        const Rational y = rnd_rational();
        if (dy_identity_residual<Rational>(P.m, P.n, P.k, P.p, x, y) != 0) return false;

        // boundary identity and the top-degree closed form
        MuValue mu;
        try {
            mu = compute_mu(P);
        } catch (const DegenerateClass&) {
            continue;
        }
        const Rational F_bq = intersection_polynomial(P.m, P.n, P.k, P.p).eval(P.b, P.q) -
                              mu.mu * intersection_polynomial(P.m, P.n, P.l, P.p).eval(P.b, P.q);
        if (F_bq != 0) return false;
        Rational closed(0);
        for (int i = 0; i <= P.n; ++i)
            closed += binomial(P.n, i) * rational_pow(P.q, P.m + i + 1) * rational_pow(P.p, P.n - i) /
                      Rational(P.m + i + 1);
        if (intersection_polynomial(P.m, P.n, N, P.p).eval(P.b, P.q) != closed) return false;
    }
    return true;
}

bool selftest_solver(std::string& detail) {
    struct Case {
        int m, n, k, l;
        const char *p, *q, *b;
    };
    const Case cases[] = {
        {1, 1, 2, 1, "1", "1", "1"},
        {1, 1, 3, 0, "1.3", "0.6", "1"},
        {0, 2, 2, 0, "0.8", "0.5", "1"},
    };
    for (const auto& c : cases) {
        CalabiParams P;
        P.m = c.m;
        P.n = c.n;
        P.k = c.k;
        P.l = c.l;
        P.p = parse_rational(c.p);
        P.q = parse_rational(c.q);
        P.b = parse_rational(c.b);
        const PipelineResult R = solve_instance(P);
        if (R.exit_code() != 0) {
            detail = "instance (" + std::to_string(c.m) + "," + std::to_string(c.n) + "," +
                     std::to_string(c.k) + "," + std::to_string(c.l) + ") exit " +
                     std::to_string(R.exit_code());
            return false;
        }
        if (!(R.seed_agreement <= 1e-8) || !(R.oracle_sup_distance <= 1e-5)) {
            detail = "oracle disagreement";
            return false;
        }
    }
    return true;
}

int cmd_selftest() {
    bool ok = true;
    ok &= report("symmetric-function cone sampling", selftest_cones());
    ok &= report("exact polynomial identities", selftest_polynomials());
    std::string detail;
    const bool solver_ok = selftest_solver(detail);
    ok &= report("seed and curve oracle agreement", solver_ok, detail);
    std::printf("selftest: %s\n", ok ? "all suites passed" : "FAILURES detected");
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical criteria and curve construction for fiberwise-symmetric "
                 "Hessian-type boundary value problems on projective bundles"};
    app.require_subcommand(1);

    CommonOpts o;
    ScanOpts s;

    CLI::App* poly = app.add_subcommand("poly", "print the intersection polynomials, the defect F and mu");
    add_param_options(poly, o);
    CLI::App* criteria = app.add_subcommand("criteria", "evaluate the positivity criteria");
    add_param_options(criteria, o);
    CLI::App* solve = app.add_subcommand("solve", "run criteria, seed, track the curve and audit it");
    add_param_options(solve, o);
    add_solver_options(solve, o);
    CLI::App* scan = app.add_subcommand("scan", "phase scan over a (p,q) grid, CSV output");
    add_param_options(scan, o);
    add_solver_options(scan, o);
    scan->add_option("--p-min", s.p_min)->envname("CALABI_P_MIN");
    scan->add_option("--p-max", s.p_max)->envname("CALABI_P_MAX");
    scan->add_option("--q-min", s.q_min)->envname("CALABI_Q_MIN");
    scan->add_option("--q-max", s.q_max)->envname("CALABI_Q_MAX");
    scan->add_option("--cells-p", s.cells_p)->envname("CALABI_CELLS_P");
    scan->add_option("--cells-q", s.cells_q)->envname("CALABI_CELLS_Q");
    scan->add_option("--jobs", s.jobs, "concurrent cells")->envname("CALABI_JOBS");
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (poly->parsed()) return cmd_poly(o);
        if (criteria->parsed()) return cmd_criteria(o);
        if (solve->parsed()) return cmd_solve(o);
        if (scan->parsed()) return cmd_scan(o, s);
        if (selftest->parsed()) return cmd_selftest();
    } catch (const DegenerateClass& e) {
        std::cerr << "degenerate: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
