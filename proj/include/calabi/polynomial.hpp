#pragma once

#include <cmath>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "calabi/rational.hpp"

namespace calabi {

/// Sparse bivariate polynomial over the exact rationals. Terms are kept in a
/// map ordered by (deg_x, deg_y), never storing zero coefficients, so equal
/// polynomials compare equal structurally and serialization order is fixed.
class BivariatePolynomial {
  public:
    using Key = std::pair<int, int>;  // (deg_x, deg_y)
    using TermMap = std::map<Key, Rational>;

    BivariatePolynomial() = default;

    void add_term(int dx, int dy, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = coeffs_.try_emplace({dx, dy}, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    const TermMap& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    int degree_x() const {
        int d = 0;
        for (const auto& [k, c] : coeffs_) d = std::max(d, k.first);
        return d;
    }
    int degree_y() const {
        int d = 0;
        for (const auto& [k, c] : coeffs_) d = std::max(d, k.second);
        return d;
    }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, c);
        return *this;
    }
    BivariatePolynomial& operator-=(const BivariatePolynomial& o) {
        for (const auto& [k, c] : o.coeffs_) add_term(k.first, k.second, -c);
        return *this;
    }
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
        a += b;
        return a;
    }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
        a -= b;
        return a;
    }

    BivariatePolynomial scaled(const Rational& s) const {
        BivariatePolynomial out;
        if (s == 0) return out;
        for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k, c * s);
        return out;
    }

    BivariatePolynomial derivative_x() const {
        BivariatePolynomial out;
        for (const auto& [k, c] : coeffs_)
            if (k.first > 0) out.add_term(k.first - 1, k.second, c * k.first);
        return out;
    }

    /// s-fold derivative in y (s = 0 returns a copy).
    BivariatePolynomial derivative_y(int s = 1) const {
        if (s < 0) throw std::invalid_argument("derivative_y: negative order");
        BivariatePolynomial out = *this;
        for (int iter = 0; iter < s; ++iter) {
            BivariatePolynomial next;
            for (const auto& [k, c] : out.coeffs_)
                if (k.second > 0) next.add_term(k.first, k.second - 1, c * k.second);
            out = std::move(next);
        }
        return out;
    }

    template <typename T>
    T eval(const T& x, const T& y) const {
        const auto xp = powers<T>(x, degree_x());
        const auto yp = powers<T>(y, degree_y());
        T acc(0);
        for (const auto& [k, c] : coeffs_)
            acc += from_rational<T>(c) * xp[static_cast<std::size_t>(k.first)] *
                   yp[static_cast<std::size_t>(k.second)];
        return acc;
    }

    /// Sum of |coeff| |x|^i |y|^j, a conditioning scale for residual tests.
    double abs_eval(double x, double y) const {
        x = std::abs(x);
        y = std::abs(y);
        const auto xp = powers<double>(x, degree_x());
        const auto yp = powers<double>(y, degree_y());
        double acc = 0;
        for (const auto& [k, c] : coeffs_)
            acc += std::abs(to_double(c)) * xp[static_cast<std::size_t>(k.first)] *
                   yp[static_cast<std::size_t>(k.second)];
        return acc;
    }

    bool operator==(const BivariatePolynomial& o) const { return coeffs_ == o.coeffs_; }

  private:
    template <typename T>
    static std::vector<T> powers(const T& v, int dmax) {
        std::vector<T> p(static_cast<std::size_t>(dmax) + 1, T(1));
        for (int i = 1; i <= dmax; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i - 1)] * v;
        return p;
    }

    TermMap coeffs_;
};

/// Double-precision snapshot of a polynomial for evaluation-heavy loops.
struct CompiledBivariate {
    struct Term {
        int dx, dy;
        double c;
    };
    std::vector<Term> terms;
    int deg_x = 0, deg_y = 0;

    double eval(double x, double y) const {
        double xp[32], yp[32];
        fill_powers(xp, x, deg_x);
        fill_powers(yp, y, deg_y);
        double acc = 0;
        for (const auto& t : terms) acc += t.c * xp[t.dx] * yp[t.dy];
        return acc;
    }
    double abs_eval(double x, double y) const {
        x = std::abs(x);
        y = std::abs(y);
        double xp[32], yp[32];
        fill_powers(xp, x, deg_x);
        fill_powers(yp, y, deg_y);
        double acc = 0;
        for (const auto& t : terms) acc += std::abs(t.c) * xp[t.dx] * yp[t.dy];
        return acc;
    }

  private:
    static void fill_powers(double* p, double v, int dmax) {
        p[0] = 1;
        for (int i = 1; i <= dmax; ++i) p[i] = p[i - 1] * v;
    }
};

inline CompiledBivariate compile(const BivariatePolynomial& p) {
    CompiledBivariate out;
    out.deg_x = p.degree_x();
    out.deg_y = p.degree_y();
    if (out.deg_x > 31 || out.deg_y > 31) throw std::invalid_argument("compile: degree too large");
    for (const auto& [k, c] : p.terms()) out.terms.push_back({k.first, k.second, to_double(c)});
    return out;
}

/// Coefficients in y of P(x0, .) with x0 substituted exactly.
inline std::vector<Rational> coefficients_in_y(const BivariatePolynomial& p, const Rational& x0) {
    std::vector<Rational> out(static_cast<std::size_t>(p.degree_y()) + 1, Rational(0));
    std::vector<Rational> xp(static_cast<std::size_t>(p.degree_x()) + 1, Rational(1));
    for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x0;
    for (const auto& [k, c] : p.terms()) out[static_cast<std::size_t>(k.second)] += c * xp[static_cast<std::size_t>(k.first)];
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

}  // namespace calabi
