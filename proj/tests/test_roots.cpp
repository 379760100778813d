#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "calabi/roots.hpp"

using namespace calabi;
using Catch::Approx;

namespace {

Poly1 from_roots(const std::vector<double>& rs) {
    Poly1 p;
    p.c = {1.0};
    for (double r : rs) {
        std::vector<double> next(p.c.size() + 1, 0.0);
        for (std::size_t i = 0; i < p.c.size(); ++i) {
            next[i + 1] += p.c[i];
            next[i] -= r * p.c[i];
        }
        p.c = next;
    }
    return p;
}

}  // namespace

TEST_CASE("real roots of low-degree polynomials") {
    CHECK(real_roots(Poly1{{5.0}}).empty());
    CHECK(real_roots(Poly1{{-6, 2}}) == std::vector<double>{3.0});
    CHECK(real_roots(Poly1{{1, 0, 1}}).empty());

    const auto r = real_roots(from_roots({1, 2, 3}));
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Approx(1.0));
    CHECK(r[1] == Approx(2.0));
    CHECK(r[2] == Approx(3.0));
}

TEST_CASE("double root at a critical point") {
    const auto r = real_roots(from_roots({-3, 1, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r[0] == Approx(-3.0));
    CHECK(r[1] == Approx(1.0).margin(1e-6));
}

TEST_CASE("random products of linear factors") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> U(-4.0, 4.0);
    std::uniform_int_distribution<int> deg(1, 7);
    for (int it = 0; it < 300; ++it) {
        const int d = deg(rng);
        std::vector<double> rs(static_cast<std::size_t>(d));
        bool separated = true;
        for (auto& x : rs) x = U(rng);
        std::sort(rs.begin(), rs.end());
        for (std::size_t i = 1; i < rs.size(); ++i)
            if (rs[i] - rs[i - 1] < 1e-3) separated = false;
        if (!separated) continue;
        const auto found = real_roots(from_roots(rs));
        REQUIRE(found.size() == rs.size());
        for (std::size_t i = 0; i < rs.size(); ++i)
            REQUIRE(found[i] == Approx(rs[i]).margin(1e-9));
    }
}

TEST_CASE("uniformly tiny coefficients do not create phantom roots") {
    // regression: a quintic section of a defect polynomial near the start
    // abscissa, where every coefficient is small; the flat stretch around
    // y ~ 7e-4 must not be reported as a root
    Poly1 p{{0.0, -1e-10, -1.502e-07, 0.0, 0.25, 0.2}};
    const auto r = real_roots(p);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == Approx(-1.25).margin(1e-3));
    CHECK(r[1] == Approx(0.0).margin(1e-12));
    CHECK(r[2] == Approx(1e-3).margin(1e-9));
}

TEST_CASE("roots respect the coefficient scale") {
    // same roots under extreme uniform scaling
    const auto base = from_roots({-2, 0.5, 1.5});
    for (double scale : {1e-200, 1e-30, 1e30}) {
        Poly1 p = base;
        for (auto& c : p.c) c *= scale;
        const auto r = real_roots(p);
        REQUIRE(r.size() == 3);
        CHECK(r[0] == Approx(-2.0));
        CHECK(r[1] == Approx(0.5));
        CHECK(r[2] == Approx(1.5));
    }
}
