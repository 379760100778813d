#pragma once

#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "calabi/criteria.hpp"
#include "calabi/solver.hpp"

namespace calabi {

struct PipelineOptions {
    double epsilon = 0;  // 0: b * 1e-3
    double step = 0;     // 0: b / 200
    double tol = 1e-12;
    int rk4_steps = 1000;
};

/// One full run over an instance: criteria, both seeding routes, curve
/// tracking, the explicit integrator, and the audit.
struct PipelineResult {
    CriteriaReport criteria;
    std::optional<SeedResult> seed;
    std::string seed_error;
    std::optional<SolutionCurve> curve;
    std::optional<SolutionCurve> oracle;
    std::optional<VerifyReport> verify;
    double seed_agreement = std::numeric_limits<double>::quiet_NaN();
    double oracle_sup_distance = std::numeric_limits<double>::quiet_NaN();

    bool solved() const { return curve && curve->status == CurveStatus::solved; }

    // 0 criteria pass and solved; 2 criteria fail and unsolved; 3 the two
    // disagree (surfaced loudly, never silently reconciled); 4 degenerate.
    int exit_code() const {
        if (criteria.verdict == Verdict::degenerate) return 4;
        const bool pass = criteria.verdict == Verdict::pass;
        if (pass == solved()) return pass ? 0 : 2;
        return 3;
    }
};

/// Sup distance between two sampled curves, measured at the second curve's
/// abscissae against the refined branch values of the first.
inline double curve_sup_distance(const CalabiParams& P, const Rational& mu, const SolutionCurve& tracked,
                                 const SolutionCurve& other) {
    const auto chain = residual_chain(P, mu);
    const CompiledBivariate F = compile(chain[0]);
    const CompiledBivariate Fy = compile(chain[0].derivative_y());
    double sup = 0;
    for (const auto& s : other.grid) {
        const auto y = branch_value_at(F, Fy, tracked, s.x);
        if (!y) continue;
        sup = std::max(sup, std::abs(*y - s.y));
    }
    return sup;
}

inline PipelineResult solve_instance(const CalabiParams& P, const PipelineOptions& opt = {}) {
    P.validate();
    PipelineResult R;
    R.criteria = classify(P);
    if (R.criteria.verdict == Verdict::degenerate) return R;
    const Rational mu = R.criteria.mu->mu;
    const double b = P.b_d();
    const double eps = opt.epsilon > 0 ? opt.epsilon : b * 1e-3;
    const double step = opt.step > 0 ? opt.step : b / 200;

    try {
        SeedResult merged = seed_chain(P, mu, eps);
        try {
            const SeedResult direct = seed_slope(P, mu);
            R.seed_agreement = std::abs(direct.chosen_slope - merged.chosen_slope);
            merged.slope_candidates = direct.slope_candidates;
        } catch (const SeedNotFound&) {
            // the chain found a branch the direct selector rejected; surfaced
            // through an infinite disagreement, never patched over
            R.seed_agreement = std::numeric_limits<double>::infinity();
        }
        R.seed = merged;
    } catch (const SeedNotFound& e) {
        R.seed_error = e.what();
        return R;
    }

    R.curve = continue_curve(P, mu, *R.seed, step, opt.tol);
    R.oracle = rk4_oracle(P, mu, *R.seed, opt.rk4_steps);
    R.verify = verify_solution(*R.curve, P, mu);
    R.oracle_sup_distance = curve_sup_distance(P, mu, *R.curve, *R.oracle);
    return R;
}

struct ScanGrid {
    Rational p_min, p_max, q_min, q_max;
    int cells_p = 0, cells_q = 0;

    void validate() const {
        if (cells_p < 1 || cells_q < 1) throw std::invalid_argument("scan grid: cells must be positive");
        if (p_max < p_min || q_max < q_min) throw std::invalid_argument("scan grid: empty range");
    }
    Rational p_at(int i) const {
        return cells_p == 1 ? p_min : p_min + (p_max - p_min) * Rational(i) / Rational(cells_p - 1);
    }
    Rational q_at(int j) const {
        return cells_q == 1 ? q_min : q_min + (q_max - q_min) * Rational(j) / Rational(cells_q - 1);
    }
};

struct ScanRow {
    Rational p, q;
    std::optional<Rational> mu;
    Verdict verdict = Verdict::degenerate;
    std::string solver_status;  // curve status, "seed_not_found", or empty
    std::optional<double> terminal_residual;
    bool dichotomy_violation = false;
};

/// Scans the (p,q) plane cell by cell. Rows come back row-major (p outer,
/// q inner); cells run concurrently up to `jobs` but assembly order is fixed,
/// so output is deterministic. Per-cell failures land in the row.
inline std::vector<ScanRow> run_scan(const CalabiParams& base, const ScanGrid& grid,
                                     const PipelineOptions& opt = {}, int jobs = 1) {
    grid.validate();
    const std::size_t total = static_cast<std::size_t>(grid.cells_p) * static_cast<std::size_t>(grid.cells_q);
    std::vector<ScanRow> rows(total);

    auto compute = [&](std::size_t idx) {
        ScanRow row;
        row.p = grid.p_at(static_cast<int>(idx) / grid.cells_q);
        row.q = grid.q_at(static_cast<int>(idx) % grid.cells_q);
        CalabiParams P = base;
        P.p = row.p;
        P.q = row.q;
        try {
            const PipelineResult R = solve_instance(P, opt);
            row.verdict = R.criteria.verdict;
            if (R.criteria.mu) row.mu = R.criteria.mu->mu;
            if (R.curve) {
                row.solver_status = to_string(R.curve->status);
                if (std::isfinite(R.curve->terminal_residual))
                    row.terminal_residual = R.curve->terminal_residual;
            } else if (!R.seed_error.empty()) {
                row.solver_status = "seed_not_found";
            }
            row.dichotomy_violation = R.exit_code() == 3;
        } catch (const std::exception&) {
            row.solver_status = "error";  // cell failures stay in the row
        }
        rows[idx] = std::move(row);
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < total; ++i) compute(i);
        return rows;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) compute(i);
    };
    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(static_cast<std::size_t>(jobs), total);
    pool.reserve(static_cast<std::size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return rows;
}

}  // namespace calabi
