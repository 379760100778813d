#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "calabi/params.hpp"
#include "calabi/polynomial.hpp"
#include "calabi/symmetric.hpp"

namespace calabi {

/// Polynomial in (x,y) equal to the k-th Taylor coefficient in t of
///     integral_0^{x+ty} s^m (1+tp+s)^n ds.
/// Expanding (1+tp+s)^n and (x+ty)^{m+r+1} binomially and collecting t^k
/// gives the closed form implemented here:
///     sum_{j,r} C(n,j) C(n-j,r) C(m+r+1,k-j) p^j x^{m+r+1-(k-j)} y^{k-j} / (m+r+1).
/// Its value at (b,q) is proportional to the k-fold intersection pairing of
/// the class p[base] + q[fiber] against the ambient Kaehler class, whence the
/// name. Negative k yields the zero polynomial by convention.
inline BivariatePolynomial intersection_polynomial(int m, int n, int k, const Rational& p) {
    if (m < 0 || n < 0) throw std::invalid_argument("intersection_polynomial: negative multiplicity");
    if (k < 0) return {};
    if (k > m + n + 1) throw std::invalid_argument("intersection_polynomial: k exceeds m+n+1");
    BivariatePolynomial out;
    for (int j = 0; j <= std::min(n, k); ++j) {
        const int a = k - j;  // power of y
        const Rational pj = rational_pow(p, j);
        if (pj == 0) continue;
        for (int r = 0; r <= n - j; ++r) {
            if (a > m + r + 1) continue;
            const Rational c = binomial(n, j) * binomial(n - j, r) * binomial(m + r + 1, a) * pj /
                               Rational(m + r + 1);
            out.add_term(m + r + 1 - a, a, c);
        }
    }
    return out;
}

template <typename T>
struct EvalPartials {
    T value;
    T dx;
    T dys;
};

/// P, dP/dx and the s-th y-derivative of P, all at (x,y).
template <typename T>
EvalPartials<T> eval_with_partials(const BivariatePolynomial& P, const T& x, const T& y, int s) {
    return {P.eval(x, y), P.derivative_x().eval(x, y), P.derivative_y(s).eval(x, y)};
}

/// The constant forced on the right-hand side, as the exact ratio of the two
/// boundary values. Throws DegenerateClass when the denominator pairing is 0.
inline MuValue compute_mu(const CalabiParams& P) {
    P.validate();
    const Rational num = intersection_polynomial(P.m, P.n, P.k, P.p).eval(P.b, P.q);
    const Rational den = intersection_polynomial(P.m, P.n, P.l, P.p).eval(P.b, P.q);
    if (den == 0) throw DegenerateClass("compute_mu: class pairing [alpha]^l [omega]^(N-l) vanishes");
    return {num / den, num, den};
}

/// The defect polynomials F_i = G^{m-i,n,k-i} - mu G^{m-i,n,l-i} for
/// i = 0..min(m,k-1), with the zero polynomial at negative upper index.
inline std::vector<BivariatePolynomial> residual_chain(const CalabiParams& P, const Rational& mu) {
    P.validate();
    const int m0 = std::min(P.m, P.k - 1);
    std::vector<BivariatePolynomial> out;
    out.reserve(static_cast<std::size_t>(m0) + 1);
    for (int i = 0; i <= m0; ++i)
        out.push_back(intersection_polynomial(P.m - i, P.n, P.k - i, P.p) -
                      intersection_polynomial(P.m - i, P.n, P.l - i, P.p).scaled(mu));
    return out;
}

/// G^{m,n,j}(b,q) / C(m+n+1, j): the j-fold class pairing normalized so the
/// unknown base volume constant is 1. Downstream criteria use only ratios
/// and signs, where that constant cancels.
inline Rational intersection_ratio(const CalabiParams& P, int j) {
    P.validate();
    if (j < 0 || j > P.total_dim()) throw std::invalid_argument("intersection_ratio: j out of range");
    return intersection_polynomial(P.m, P.n, j, P.p).eval(P.b, P.q) / binomial(P.total_dim(), j);
}

/// Residual of the identity
///     dG^{m,n,k}/dy (x,y) = x^m (1+x)^n sigma_{k-1}(reduced eigenvalues),
/// which should vanish identically for x > 0.
template <typename T>
T dy_identity_residual(int m, int n, int k, const Rational& p, const T& x, const T& y) {
    if (!(x > T(0))) throw std::invalid_argument("dy_identity_residual: requires x > 0");
    const BivariatePolynomial G = intersection_polynomial(m, n, k, p);
    const T lhs = G.derivative_y().eval(x, y);
    const auto pair = ansatz_eigenvalues<T>(m, n, from_rational<T>(p), x, y);
    T factor(1);
    for (int i = 0; i < m; ++i) factor *= x;
    for (int i = 0; i < n; ++i) factor *= T(1) + x;
    return lhs - factor * sigma(k - 1, pair.reduced.values);
}

}  // namespace calabi
