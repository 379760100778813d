#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "calabi/pipeline.hpp"

using namespace calabi;
using Catch::Approx;

namespace {

CalabiParams make(int m, int n, int k, int l, const char* p, const char* q, const char* b) {
    CalabiParams P;
    P.m = m;
    P.n = n;
    P.k = k;
    P.l = l;
    P.p = parse_rational(p);
    P.q = parse_rational(q);
    P.b = parse_rational(b);
    return P;
}

}  // namespace

TEST_CASE("seed slope closed forms") {
    {
        // top degree, l = 0: the slope polynomial is t^{m+1} p^n - mu
        const auto P = make(1, 1, 3, 0, "1.3", "0.6", "1");
        const Rational mu = compute_mu(P).mu;
        const auto seed = seed_slope(P, mu);
        CHECK(seed.chosen_slope == Approx(std::sqrt(to_double(mu) / 1.3)).epsilon(1e-12));
    }
    {
        // m = 0: affine slope polynomial, unique root by linearity in the
        // final entry
        const auto P = make(0, 2, 2, 0, "0.8", "0.5", "1");
        const Rational mu = compute_mu(P).mu;
        const auto seed = seed_slope(P, mu);
        // sigma_2((t, p, p)) = 2 p t + p^2 = mu
        const double pd = 0.8;
        CHECK(seed.chosen_slope == Approx((to_double(mu) - pd * pd) / (2 * pd)).epsilon(1e-12));
    }
    {
        // proportional classes: the curve is y = x, slope one
        const auto P = make(2, 1, 2, 1, "1", "1", "1");
        const auto seed = seed_slope(P, compute_mu(P).mu);
        CHECK(seed.chosen_slope == Approx(1.0).epsilon(1e-12));
    }
    {
        // no admissible stable root
        const auto P = make(1, 1, 2, 0, "1", "0", "1");  // mu = 0 forces the cone shut
        CHECK_THROWS_AS(seed_slope(P, compute_mu(P).mu), SeedNotFound);
    }
}

TEST_CASE("seed chain matches the direct selection and orders its slopes") {
    // covers both base cases: the linear-ODE bottom (m+1 > k-1, with and
    // without the mu-term) and the implicit-function bottom (m+1 <= k-1)
    const int cfgs[][4] = {{1, 1, 2, 1}, {1, 1, 3, 0}, {0, 2, 2, 0}, {2, 1, 2, 1},
                           {3, 1, 4, 2}, {2, 1, 2, 0}, {0, 2, 2, 1}};
    const char* pq[][2] = {{"1", "0.5"}, {"1.3", "0.6"}, {"0.7", "0.9"}};
    for (const auto& c : cfgs)
        for (const auto& v : pq) {
            const auto P = make(c[0], c[1], c[2], c[3], v[0], v[1], "1");
            const Rational mu = compute_mu(P).mu;
            const auto chain = seed_chain(P, mu, 1e-3);
            const auto direct = seed_slope(P, mu);
            INFO("cfg (" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ") p=" << v[0]
                         << " q=" << v[1]);
            REQUIRE(std::abs(chain.chosen_slope - direct.chosen_slope) <= 1e-8);
            // slopes are listed from the bottom of the chain up and increase
            for (std::size_t i = 1; i < chain.chain_slopes.size(); ++i)
                REQUIRE(chain.chain_slopes[i] >= chain.chain_slopes[i - 1] - 1e-12);
            REQUIRE(chain.epsilon > 0);
        }
}

TEST_CASE("chain start value sits on the tracked branch") {
    const auto P = make(1, 1, 3, 0, "1.3", "0.6", "1");
    const Rational mu = compute_mu(P).mu;
    const auto seed = seed_chain(P, mu, 1e-3);
    const auto F = residual_chain(P, mu);
    CHECK(std::abs(to_double(F[0].eval(Rational(seed.epsilon), Rational(seed.y_at_epsilon)))) <= 1e-15);
    CHECK(seed.y_at_epsilon / seed.epsilon == Approx(seed.chosen_slope).margin(2e-3));
}

TEST_CASE("degenerate constant chains") {
    {
        // p = 0 with the lower index below zero: zero functions down to l
        const auto P = make(2, 1, 2, 0, "0", "0.5", "1");
        const Rational mu = compute_mu(P).mu;
        const auto seed = seed_chain(P, mu, 1e-3);
        REQUIRE(seed.chain_slopes.size() == 2);
        CHECK(seed.chain_slopes[0] == 0.0);
        CHECK(seed.chain_slopes[1] > 0.0);
    }
    {
        // top degree k = m+n+1: interior chain functions vanish identically
        const auto P = make(2, 1, 4, 0, "1", "1", "1");
        const Rational mu = compute_mu(P).mu;
        const auto seed = seed_chain(P, mu, 1e-3);
        REQUIRE(seed.chain_slopes.size() == 3);
        CHECK(seed.chain_slopes[0] == 0.0);
        CHECK(seed.chain_slopes[1] == 0.0);
        CHECK(seed.chain_slopes.back() == Approx(std::pow(to_double(mu), 1.0 / 3)).epsilon(1e-10));
    }
}

TEST_CASE("tracking the proportional class gives the identity curve") {
    const auto P = make(1, 2, 3, 1, "1", "1", "1");
    const Rational mu = compute_mu(P).mu;
    const auto seed = seed_chain(P, mu, 1e-3);
    const auto curve = continue_curve(P, mu, seed, 1.0 / 200, 1e-12);
    REQUIRE(curve.status == CurveStatus::solved);
    double dev = 0;
    for (const auto& s : curve.grid) dev = std::max(dev, std::abs(s.y - s.x));
    CHECK(dev <= 1e-12);
    CHECK(curve.terminal_residual <= 1e-12);
    for (const auto& s : curve.grid) {
        CHECK(s.admissible);
        CHECK(s.residual <= 1e-12 * 10);
    }
    const auto oracle = rk4_oracle(P, mu, seed, 1000);
    REQUIRE(oracle.status == CurveStatus::solved);
    double odev = 0;
    for (const auto& s : oracle.grid) odev = std::max(odev, std::abs(s.y - s.x));
    CHECK(odev <= 1e-10);
}

TEST_CASE("curve is strictly increasing on solved instances") {
    const char* cases[][2] = {{"1.3", "0.6"}, {"0.5", "0.25"}, {"2", "0.9"}};
    for (const auto& v : cases) {
        const auto P = make(1, 1, 3, 0, v[0], v[1], "1");
        const auto R = solve_instance(P);
        REQUIRE(R.solved());
        for (std::size_t i = 1; i < R.curve->grid.size(); ++i)
            REQUIRE(R.curve->grid[i].y > R.curve->grid[i - 1].y);
        for (const auto& s : R.curve->grid) REQUIRE(s.yprime > 0);
    }
}

TEST_CASE("failing instances are refused with a diagnosed status") {
    {
        // the admissibility cone is exited along the way
        const auto R = solve_instance(make(1, 1, 2, 0, "1", "-0.5", "1"));
        CHECK(R.criteria.verdict == Verdict::fail_Dinf);
        REQUIRE(R.curve);
        CHECK(R.curve->status == CurveStatus::admissibility_lost);
        CHECK(R.exit_code() == 2);
    }
    {
        // the curve reaches the far end on a different boundary value
        const auto R = solve_instance(make(1, 1, 3, 0, "2", "-0.5", "1"));
        CHECK(R.criteria.verdict == Verdict::fail_Dinf);
        REQUIRE(R.curve);
        CHECK(R.curve->status == CurveStatus::boundary_mismatch);
        CHECK(R.curve->terminal_residual > 1e-3);
        CHECK(R.exit_code() == 2);
    }
    {
        // seeding is impossible when the stability root is absent
        const auto R = solve_instance(make(0, 2, 2, 0, "-1", "0.5", "1"));
        CHECK(R.criteria.verdict == Verdict::fail_P0);
        CHECK_FALSE(R.curve);
        CHECK_FALSE(R.seed_error.empty());
        CHECK(R.exit_code() == 2);
    }
}

TEST_CASE("fold detection on a descending branch") {
    // seed the second (unstable) root of the section by hand
    const auto P = make(1, 1, 2, 1, "1", "1", "1");
    const Rational mu = compute_mu(P).mu;
    const auto F = residual_chain(P, mu);
    const auto roots = real_roots(to_poly1(coefficients_in_y(F[0], Rational(1, 1000))));
    REQUIRE(roots.size() >= 2);
    SeedResult seed;
    seed.epsilon = 1e-3;
    seed.y_at_epsilon = roots.front();  // negative branch, dF/dy < 0 there
    seed.chosen_slope = roots.front() / 1e-3;
    const auto curve = continue_curve(P, mu, seed, 1.0 / 200, 1e-12);
    CHECK(curve.status == CurveStatus::fold_detected);
    const auto oracle = rk4_oracle(P, mu, seed, 500);
    CHECK(oracle.status == CurveStatus::fold_detected);
}

TEST_CASE("explicit integrator agrees with implicit tracking") {
    const int cfgs[][4] = {{1, 1, 2, 1}, {1, 1, 3, 0}, {0, 2, 2, 0}, {2, 1, 2, 1}};
    for (const auto& c : cfgs) {
        const auto P = make(c[0], c[1], c[2], c[3], "0.9", "0.55", "1");
        const auto R = solve_instance(P);
        REQUIRE(R.solved());
        REQUIRE(R.oracle);
        CHECK(R.oracle->status == CurveStatus::solved);
        CHECK(R.oracle_sup_distance <= 1e-5);
        CHECK(R.seed_agreement <= 1e-8);
    }
}

TEST_CASE("audit certificates") {
    const auto P = make(1, 1, 2, 1, "1", "1", "1");
    const Rational mu = compute_mu(P).mu;
    const auto R = solve_instance(P);
    REQUIRE(R.solved());
    REQUIRE(R.verify);
    CHECK(R.verify->certificate);
    CHECK(R.verify->all_admissible);
    CHECK(R.verify->max_residual <= 1e-10);
    CHECK(R.verify->terminal_residual <= 1e-10);

    SECTION("tampered boundary value is refused") {
        SolutionCurve tampered = *R.curve;
        tampered.grid.back().y += 0.25;
        const auto rep = verify_solution(tampered, P, mu);
        CHECK_FALSE(rep.certificate);
    }
    SECTION("an inadmissible sample is located") {
        SolutionCurve tampered = *R.curve;
        tampered.grid[5].yprime = -100.0;
        const auto rep = verify_solution(tampered, P, mu);
        CHECK_FALSE(rep.certificate);
        REQUIRE(rep.first_violation);
        CHECK(*rep.first_violation == 5);
    }
}

TEST_CASE("pipeline surfaces criteria blind spots loudly") {
    // q < 0 with l >= 1: the tower and zero-section checks pass but no
    // subharmonic representative exists; the solver must refuse and the
    // disagreement must surface as exit code 3 with a warning note
    const auto R = solve_instance(make(2, 1, 2, 1, "2", "-0.2", "1"));
    CHECK(R.criteria.verdict == Verdict::pass);
    CHECK_FALSE(R.solved());
    CHECK(R.exit_code() == 3);
    CHECK(R.criteria.notes.find("Warning") != std::string::npos);
}

TEST_CASE("determinism of the full pipeline") {
    const auto P = make(1, 1, 3, 0, "1.3", "0.6", "1");
    const auto A = solve_instance(P);
    const auto B = solve_instance(P);
    REQUIRE((A.curve && B.curve));
    REQUIRE(A.curve->grid.size() == B.curve->grid.size());
    for (std::size_t i = 0; i < A.curve->grid.size(); ++i) {
        REQUIRE(A.curve->grid[i].x == B.curve->grid[i].x);
        REQUIRE(A.curve->grid[i].y == B.curve->grid[i].y);
    }
}
