#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "calabi/rational.hpp"

namespace calabi {

/// All elementary symmetric functions e_0..e_n of the entries, via the
/// O(n^2) product recurrence on prod_i (1 + v_i z).
template <typename T>
std::vector<T> sigma_all(const std::vector<T>& v) {
    std::vector<T> e(v.size() + 1, T(0));
    e[0] = T(1);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = std::min(i + 1, v.size()); j >= 1; --j)
            e[j] += v[i] * e[j - 1];
    return e;
}

/// sigma_k with the conventions sigma_0 = 1 and sigma_k = 0 for k < 0 or
/// k beyond the vector length.
template <typename T>
T sigma(int k, const std::vector<T>& v) {
    if (k < 0 || k > static_cast<int>(v.size())) return T(0);
    if (k == 0) return T(1);
    return sigma_all(v)[static_cast<std::size_t>(k)];
}

template <typename T>
T sigma_or_zero(const std::vector<T>& e, int k) {
    if (k < 0 || k >= static_cast<int>(e.size())) return T(0);
    return e[static_cast<std::size_t>(k)];
}

/// Strict test for membership in the open cone { sigma_i > 0, 0 <= i <= k }.
template <typename T>
bool in_admissible_cone(const std::vector<T>& v, int k) {
    if (k < 1 || k > static_cast<int>(v.size()))
        throw std::invalid_argument("in_admissible_cone: k out of range");
    const auto e = sigma_all(v);
    for (int i = 1; i <= k; ++i)
        if (!(e[static_cast<std::size_t>(i)] > T(0))) return false;
    return true;
}

/// (sigma_r / C(n,r))^2 - (sigma_{r-1}/C(n,r-1)) (sigma_{r+1}/C(n,r+1)).
/// Non-negative for every real vector, zero exactly when all entries agree.
template <typename T>
T newton_defect(const std::vector<T>& v, int r) {
    const int n = static_cast<int>(v.size());
    if (r < 1 || r > n - 1) throw std::invalid_argument("newton_defect: r out of range");
    const auto e = sigma_all(v);
    const T mr = e[static_cast<std::size_t>(r)] / from_rational<T>(binomial(n, r));
    const T ml = e[static_cast<std::size_t>(r - 1)] / from_rational<T>(binomial(n, r - 1));
    const T mu = e[static_cast<std::size_t>(r + 1)] / from_rational<T>(binomial(n, r + 1));
    return mr * mr - ml * mu;
}

/// ((sigma_k/C(n,k)) / (sigma_l/C(n,l)))^{1/(k-l)} on the admissible cone.
inline double hessian_quotient(const std::vector<double>& v, int k, int l) {
    const int n = static_cast<int>(v.size());
    if (l < 0 || l >= k || k > n) throw std::invalid_argument("hessian_quotient: need 0 <= l < k <= dim");
    if (!in_admissible_cone(v, k)) throw std::domain_error("hessian_quotient: outside admissible cone");
    const auto e = sigma_all(v);
    const double num = e[static_cast<std::size_t>(k)] / binomial_d(n, k);
    const double den = e[static_cast<std::size_t>(l)] / binomial_d(n, l);
    return std::pow(num / den, 1.0 / (k - l));
}

/// True iff every sum of q+1 distinct entries is positive, equivalently the
/// q+1 smallest entries sum to something positive.
template <typename T>
bool uniform_q_positive(std::vector<T> v, int q) {
    if (q < 0 || q + 1 > static_cast<int>(v.size()))
        throw std::invalid_argument("uniform_q_positive: q out of range");
    std::sort(v.begin(), v.end());
    T acc(0);
    for (int i = 0; i <= q; ++i) acc += v[static_cast<std::size_t>(i)];
    return acc > T(0);
}

/// Block structure marker: first_count leading equal entries, then
/// second_count equal entries, optionally one trailing free entry.
struct BlockTag {
    int first_count = 0;
    int second_count = 0;
    bool has_last = false;
};

template <typename T>
struct EigenVector {
    std::vector<T> values;
    std::optional<BlockTag> tag;

    bool tag_consistent() const {
        if (!tag) return true;
        const auto n = static_cast<std::size_t>(tag->first_count) +
                       static_cast<std::size_t>(tag->second_count) + (tag->has_last ? 1 : 0);
        if (values.size() != n) return false;
        for (int i = 1; i < tag->first_count; ++i)
            if (!(values[static_cast<std::size_t>(i)] == values[0])) return false;
        for (int i = 1; i < tag->second_count; ++i)
            if (!(values[static_cast<std::size_t>(tag->first_count + i)] ==
                  values[static_cast<std::size_t>(tag->first_count)]))
                return false;
        return true;
    }
};

/// Eigenvalues of the symmetric ansatz at a point of the curve: `full` holds
/// (y/x m-times, (p+y)/(1+x) n-times, y') and `reduced` drops the final
/// entry. At x = 0 (which forces y = 0) the limits are (y' (m+1)-times,
/// p n-times) and its truncation by one y' copy; y' is then mandatory.
template <typename T>
struct EigenPair {
    std::optional<EigenVector<T>> full;
    EigenVector<T> reduced;
};

template <typename T>
EigenPair<T> ansatz_eigenvalues(int m, int n, const T& p, const T& x, const T& y,
                                const std::optional<T>& yprime = std::nullopt) {
    if (m < 0 || n < 0) throw std::invalid_argument("ansatz_eigenvalues: negative multiplicity");
    if (x < T(0)) throw std::invalid_argument("ansatz_eigenvalues: x must be non-negative");
    EigenPair<T> out;
    if (x == T(0)) {
        if (!(y == T(0)) || !yprime)
            throw std::domain_error("ansatz_eigenvalues: x = 0 requires y = 0 and a slope value");
        EigenVector<T> full;
        full.values.assign(static_cast<std::size_t>(m + 1), *yprime);
        full.values.insert(full.values.end(), static_cast<std::size_t>(n), p);
        full.tag = BlockTag{m + 1, n, false};
        EigenVector<T> red;
        red.values.assign(static_cast<std::size_t>(m), *yprime);
        red.values.insert(red.values.end(), static_cast<std::size_t>(n), p);
        red.tag = BlockTag{m, n, false};
        out.full = std::move(full);
        out.reduced = std::move(red);
        return out;
    }
    const T fiber = y / x;
    const T base = (p + y) / (T(1) + x);
    EigenVector<T> red;
    red.values.assign(static_cast<std::size_t>(m), fiber);
    red.values.insert(red.values.end(), static_cast<std::size_t>(n), base);
    red.tag = BlockTag{m, n, false};
    if (yprime) {
        EigenVector<T> full = red;
        full.values.push_back(*yprime);
        full.tag = BlockTag{m, n, true};
        out.full = std::move(full);
    }
    out.reduced = std::move(red);
    return out;
}

}  // namespace calabi
