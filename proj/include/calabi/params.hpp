#pragma once

#include <stdexcept>
#include <string>

#include "calabi/rational.hpp"

namespace calabi {

/// The class pairing [alpha]^l [omega]^{N-l} vanishes, so the forced
/// constant of the equation is undefined.
struct DegenerateClass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// No admissible seed branch exists at the curve origin.
struct SeedNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One problem instance on the projective bundle P(O + L^(m+1)) over an
/// n-dimensional base: equation indices (k,l), class coefficients (p,q)
/// and the ambient Kaehler parameter b.
struct CalabiParams {
    int m = 0;  // fiber multiplicity exponent
    int n = 1;  // base dimension
    int k = 1;
    int l = 0;
    Rational p = Rational(1);
    Rational q = Rational(1);
    Rational b = Rational(1);

    int total_dim() const { return m + n + 1; }

    double p_d() const { return to_double(p); }
    double q_d() const { return to_double(q); }
    double b_d() const { return to_double(b); }

    void validate() const {
        if (m < 0) throw std::invalid_argument("params: m must be non-negative");
        if (n < 1) throw std::invalid_argument("params: n must be positive");
        if (!(0 <= l && l < k && k <= total_dim()))
            throw std::invalid_argument("params: need 0 <= l < k <= m+n+1");
        if (!(b > 0)) throw std::invalid_argument("params: b must be positive");
    }
};

/// Ratio of intersection numbers forced by integrating the equation over the
/// whole space: mu = numerator/denominator with both sides evaluated at (b,q).
struct MuValue {
    Rational mu;
    Rational numerator;
    Rational denominator;
};

}  // namespace calabi
