#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "calabi/rational.hpp"

namespace calabi {

/// Dense univariate polynomial with double coefficients, ascending degree.
struct Poly1 {
    std::vector<double> c;

    double eval(double t) const {
        double acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
        return acc;
    }
    double abs_eval(double t) const {
        t = std::abs(t);
        double acc = 0;
        for (std::size_t i = c.size(); i-- > 0;) acc = acc * t + std::abs(c[i]);
        return acc;
    }
    Poly1 derivative() const {
        Poly1 d;
        for (std::size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * static_cast<double>(i));
        return d;
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
};

inline Poly1 to_poly1(const std::vector<Rational>& coeffs) {
    Poly1 p;
    p.c.reserve(coeffs.size());
    for (const auto& r : coeffs) p.c.push_back(to_double(r));
    return p;
}

namespace detail {

inline Poly1 trimmed(Poly1 p) {
    double maxc = 0;
    for (double v : p.c) maxc = std::max(maxc, std::abs(v));
    if (maxc == 0) {
        p.c.clear();
        return p;
    }
    while (!p.c.empty() && std::abs(p.c.back()) <= 1e-14 * maxc) p.c.pop_back();
    for (double& v : p.c) v /= maxc;  // normalized scale keeps the tolerances meaningful
    return p;
}

inline double bisect(const Poly1& p, double lo, double hi, double flo) {
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p.eval(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

inline double polish(const Poly1& p, const Poly1& dp, double t, double lo, double hi) {
    for (int it = 0; it < 8; ++it) {
        const double f = p.eval(t), d = dp.eval(t);
        if (d == 0) break;
        const double next = t - f / d;
        if (!(next >= lo && next <= hi)) break;  // keep the bracket
        if (std::abs(next - t) <= 1e-17 * (1.0 + std::abs(t))) return next;
        t = next;
    }
    return t;
}

}  // namespace detail

/// All real roots, ascending, deduplicated. Roots are isolated by recursing
/// on the critical points and bisecting each sign change, then polished by
/// guarded Newton steps. Near-multiple roots at critical points are reported
/// once. Intended for the small degrees (<= ~12) arising here.
inline std::vector<double> real_roots(const Poly1& input) {
    const Poly1 p = detail::trimmed(input);
    std::vector<double> roots;
    const int deg = p.degree();
    if (deg <= 0) return roots;
    if (deg == 1) {
        roots.push_back(-p.c[0] / p.c[1]);
        return roots;
    }
    if (deg == 2) {
        const double a = p.c[2], b = p.c[1], c0 = p.c[0];
        const double disc = b * b - 4 * a * c0;
        if (disc < 0) return roots;
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (b + (b >= 0 ? sq : -sq));
        double r1 = q / a;
        double r2 = (q != 0) ? c0 / q : -b / (2 * a);
        if (r1 > r2) std::swap(r1, r2);
        roots.push_back(r1);
        if (disc > 0) roots.push_back(r2);
        return roots;
    }

    double bound = 0;
    for (int i = 0; i < deg; ++i) bound = std::max(bound, std::abs(p.c[static_cast<std::size_t>(i)]));
    bound = 1.0 + bound / std::abs(p.c[static_cast<std::size_t>(deg)]);

    const Poly1 dp = p.derivative();
    std::vector<double> pts = real_roots(dp);
    pts.erase(std::remove_if(pts.begin(), pts.end(),
                             [&](double t) { return t <= -bound || t >= bound; }),
              pts.end());
    pts.insert(pts.begin(), -bound);
    pts.push_back(bound);
    std::sort(pts.begin(), pts.end());

    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        const double flo = p.eval(lo), fhi = p.eval(hi);
        if (flo == 0) roots.push_back(lo);
        if ((flo > 0 && fhi < 0) || (flo < 0 && fhi > 0)) {
            double r = detail::bisect(p, lo, hi, flo);
            r = detail::polish(p, dp, r, lo, hi);
            roots.push_back(r);
        }
    }
    if (p.eval(pts.back()) == 0) roots.push_back(pts.back());
    // touching (even-multiplicity) roots sit at critical points
    for (std::size_t i = 1; i + 1 < pts.size(); ++i)
        if (std::abs(p.eval(pts[i])) <= 1e-13 * p.abs_eval(pts[i])) roots.push_back(pts[i]);

    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > 1e-11 * (1.0 + std::abs(r))) out.push_back(r);
    return out;
}

}  // namespace calabi
