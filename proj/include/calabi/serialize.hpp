#pragma once

#include <ostream>

#include <json.hpp>

#include "calabi/pipeline.hpp"

namespace calabi {

using json = nlohmann::json;

inline json to_json(const BivariatePolynomial& p) {
    json terms = json::array();
    for (const auto& [key, c] : p.terms()) terms.push_back(json::array({key.first, key.second, to_fraction_string(c)}));
    return json{{"terms", terms}};
}

inline json to_json(const CriteriaReport& r) {
    json j;
    j["mu"] = r.mu ? json(to_double(r.mu->mu)) : json(nullptr);
    j["p0"] = json{{"applicable", r.p0.applicable},
                   {"value", fmt17(to_double(r.p0.value))},
                   {"pass", r.p0.pass},
                   {"rule", to_string(r.p0.rule)}};
    json tower = json::array();
    for (const auto& e : r.dinf_tower)
        tower.push_back(json{{"s", e.s}, {"value", fmt17(to_double(e.value))}, {"pass", e.pass}});
    j["dinf_tower"] = tower;
    j["verdict"] = to_string(r.verdict);
    j["notes"] = r.notes;
    return j;
}

inline json to_json(const SeedResult& s) {
    return json{{"slope_candidates", s.slope_candidates},
                {"chosen_slope", s.chosen_slope},
                {"chain_slopes", s.chain_slopes},
                {"epsilon", s.epsilon},
                {"y_at_epsilon", s.y_at_epsilon}};
}

inline json to_json(const VerifyReport& v) {
    json j{{"certificate", v.certificate},
           {"max_residual", v.max_residual},
           {"all_admissible", v.all_admissible},
           {"status", to_string(v.status)}};
    j["terminal_residual"] = std::isfinite(v.terminal_residual) ? json(v.terminal_residual) : json(nullptr);
    j["first_violation"] = v.first_violation ? json(*v.first_violation) : json(nullptr);
    return j;
}

inline json solve_report_json(const PipelineResult& r) {
    json j;
    j["criteria"] = to_json(r.criteria);
    j["seed"] = r.seed ? to_json(*r.seed) : json(nullptr);
    if (!r.seed_error.empty()) j["seed_error"] = r.seed_error;
    j["seed_agreement"] = std::isfinite(r.seed_agreement) ? json(r.seed_agreement) : json(nullptr);
    j["solver_status"] = r.curve ? json(to_string(r.curve->status)) : json(nullptr);
    j["terminal_residual"] =
        (r.curve && std::isfinite(r.curve->terminal_residual)) ? json(r.curve->terminal_residual) : json(nullptr);
    j["oracle_status"] = r.oracle ? json(to_string(r.oracle->status)) : json(nullptr);
    j["oracle_sup_distance"] =
        std::isfinite(r.oracle_sup_distance) ? json(r.oracle_sup_distance) : json(nullptr);
    j["verify"] = r.verify ? to_json(*r.verify) : json(nullptr);
    j["exit_code"] = r.exit_code();
    return j;
}

inline void write_curve_csv(std::ostream& os, const SolutionCurve& curve) {
    os << "x,y,yprime,residual,admissible\n";
    for (const auto& s : curve.grid)
        os << fmt17(s.x) << ',' << fmt17(s.y) << ',' << fmt17(s.yprime) << ',' << fmt17(s.residual)
           << ',' << (s.admissible ? 1 : 0) << '\n';
}

inline void write_scan_csv(std::ostream& os, const std::vector<ScanRow>& rows) {
    os << "p,q,mu,criteria_verdict,solver_status,terminal_residual\n";
    for (const auto& r : rows) {
        os << fmt17(to_double(r.p)) << ',' << fmt17(to_double(r.q)) << ',';
        if (r.mu) os << fmt17(to_double(*r.mu));
        os << ',' << to_string(r.verdict) << ',' << r.solver_status << ',';
        if (r.terminal_residual) os << fmt17(*r.terminal_residual);
        os << '\n';
    }
}

}  // namespace calabi
