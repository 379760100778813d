#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace calabi {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

template <typename T>
T from_rational(const Rational& r);

template <>
inline double from_rational<double>(const Rational& r) { return to_double(r); }

template <>
inline Rational from_rational<Rational>(const Rational& r) { return r; }

/// Exact binomial coefficient; zero for k < 0 or k > n. Requires n >= 0.
inline Rational binomial(int n, int k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (k < 0 || k > n) return Rational(0);
    if (k > n - k) k = n - k;
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= n - i;
        den *= i + 1;
    }
    return Rational(num / den);
}

inline double binomial_d(int n, int k) { return to_double(binomial(n, k)); }

/// base^e for non-negative integer e, with 0^0 = 1.
inline Rational rational_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

/// Parses "n", "n/d", "1.25", ".5", "2e-3", "-0.7e+2" into an exact rational.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("parse_rational: bad number '" + std::string(s) + "'"); };
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    if (s.empty()) fail();

    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (num.empty() || den.empty()) fail();
        BigInt n, d;
        try {
            n = BigInt(num);
            d = BigInt(den);
        } catch (...) {
            fail();
        }
        if (d == 0) fail();
        return Rational(n, d);
    }

    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') neg = (s[i++] == '-');
    BigInt mantissa = 0;
    long frac_digits = 0, digits = 0;
    bool seen_dot = false;
    for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
        if (s[i] == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (s[i] >= '0' && s[i] <= '9') {
            mantissa = mantissa * 10 + (s[i] - '0');
            ++digits;
            if (seen_dot) ++frac_digits;
        } else {
            fail();
        }
    }
    if (digits == 0) fail();
    long exp10 = 0;
    if (i < s.size()) {  // exponent part
        ++i;
        bool eneg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) eneg = (s[i++] == '-');
        if (i >= s.size()) fail();
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') fail();
            exp10 = exp10 * 10 + (s[i] - '0');
            if (exp10 > 100000) fail();
        }
        if (eneg) exp10 = -exp10;
    }
    exp10 -= frac_digits;
    Rational r(mantissa);
    if (exp10 > 0)
        r *= Rational(rational_pow(Rational(10), static_cast<int>(exp10)));
    else if (exp10 < 0)
        r /= Rational(rational_pow(Rational(10), static_cast<int>(-exp10)));
    return neg ? -r : r;
}

/// "num/den" with the denominator omitted when it is 1.
inline std::string to_fraction_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

/// Shortest-round-trip style formatting used for all emitted numbers.
inline std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace calabi
