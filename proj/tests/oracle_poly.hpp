#pragma once

// Test-only sparse polynomial in three variables over the exact rationals.
// Used to rebuild the intersection polynomials by literal symbolic
// manipulation (expand the integrand, integrate, substitute, differentiate),
// independent of the closed-form construction under test.

#include <array>
#include <map>

#include "calabi/polynomial.hpp"
#include "calabi/rational.hpp"

namespace oracle {

using calabi::Rational;

struct TriPoly {
    // exponents of the three variables -> coefficient
    std::map<std::array<int, 3>, Rational> terms;

    static TriPoly constant(const Rational& c) {
        TriPoly p;
        p.add({0, 0, 0}, c);
        return p;
    }
    static TriPoly monomial(int v0, int v1, int v2, const Rational& c) {
        TriPoly p;
        p.add({v0, v1, v2}, c);
        return p;
    }

    void add(const std::array<int, 3>& e, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms.try_emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    TriPoly operator+(const TriPoly& o) const {
        TriPoly out = *this;
        for (const auto& [e, c] : o.terms) out.add(e, c);
        return out;
    }
    TriPoly operator*(const TriPoly& o) const {
        TriPoly out;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms)
                out.add({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
        return out;
    }
    TriPoly pow(int e) const {
        TriPoly out = constant(Rational(1));
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    TriPoly integrate(int var) const {
        TriPoly out;
        for (const auto& [e, c] : terms) {
            auto en = e;
            en[static_cast<std::size_t>(var)] += 1;
            out.add(en, c / Rational(en[static_cast<std::size_t>(var)]));
        }
        return out;
    }
    TriPoly differentiate(int var) const {
        TriPoly out;
        for (const auto& [e, c] : terms) {
            const int d = e[static_cast<std::size_t>(var)];
            if (d == 0) continue;
            auto en = e;
            en[static_cast<std::size_t>(var)] -= 1;
            out.add(en, c * Rational(d));
        }
        return out;
    }
    /// Substitute variable `var` by the polynomial `repl`.
    TriPoly substitute(int var, const TriPoly& repl) const {
        TriPoly out;
        for (const auto& [e, c] : terms) {
            auto base = e;
            const int d = base[static_cast<std::size_t>(var)];
            base[static_cast<std::size_t>(var)] = 0;
            TriPoly term = monomial(base[0], base[1], base[2], c) * repl.pow(d);
            out = out + term;
        }
        return out;
    }
    TriPoly at_zero(int var) const {
        TriPoly out;
        for (const auto& [e, c] : terms)
            if (e[static_cast<std::size_t>(var)] == 0) out.add(e, c);
        return out;
    }
};

/// Literal symbolic construction of the k-th Taylor coefficient in t of
/// integral_0^{x+ty} s^m (1+tp+s)^n ds, staged as: expand the integrand in
/// (s,t) by repeated multiplication, integrate in s, substitute s = x + t y,
/// differentiate k times in t, set t = 0, divide by k!.
/// Variable slots: stage one (0:s, 1:t); stage two (0:x, 1:t, 2:y).
inline calabi::BivariatePolynomial symbolic_G(int m, int n, int k, const Rational& p) {
    TriPoly integrand = TriPoly::monomial(1, 0, 0, Rational(1)) +          // s
                        TriPoly::monomial(0, 1, 0, p) +                    // t p
                        TriPoly::constant(Rational(1));
    integrand = integrand.pow(n) * TriPoly::monomial(m, 0, 0, Rational(1));
    TriPoly anti = integrand.integrate(0);  // vanishes at s = 0, no constant
    const TriPoly upper = TriPoly::monomial(1, 0, 0, Rational(1)) +        // x (slot 0 reused)
                          TriPoly::monomial(0, 1, 1, Rational(1));         // t y
    TriPoly q = anti.substitute(0, upper);
    Rational fact(1);
    for (int i = 1; i <= k; ++i) {
        q = q.differentiate(1);
        fact *= i;
    }
    q = q.at_zero(1);
    calabi::BivariatePolynomial out;
    for (const auto& [e, c] : q.terms) out.add_term(e[0], e[2], c / fact);
    return out;
}

}  // namespace oracle
