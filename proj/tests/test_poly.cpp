#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "test_support.hpp"

using namespace oneforms;
using oneforms::testing::Gen;

namespace {

ComplexPoly real_poly(std::initializer_list<double> coeffs) {
    std::vector<cplx> c;
    for (double v : coeffs) c.emplace_back(v, 0.0);
    return ComplexPoly{std::move(c)};
}

bool coeffs_close(const ComplexPoly& a, const ComplexPoly& b, double tol = 1e-10) {
    if (a.c.size() != b.c.size()) return false;
    double scale = 1.0;
    for (const cplx& v : a.c) scale = std::max(scale, std::abs(v));
    for (size_t i = 0; i < a.c.size(); ++i)
        if (std::abs(a.c[i] - b.c[i]) > tol * scale) return false;
    return true;
}

} // namespace

TEST_CASE("evaluation") {
    CHECK(poly_eval(real_poly({1, 0, -1}), cplx(1.0)) == cplx(0.0));
    CHECK(poly_eval(real_poly({1, 0, -1}), cplx(0.0)) == cplx(-1.0));
    CHECK(poly_eval(real_poly({2, -6, 4}), cplx(3.0)) == cplx(4.0));
    CHECK(poly_eval(ComplexPoly{}, cplx(7.0)) == cplx(0.0));
}

TEST_CASE("derivative") {
    CHECK(coeffs_close(poly_derivative(real_poly({1, 0, -1})), real_poly({2, 0})));
    CHECK(poly_derivative(real_poly({5})).is_zero());
    CHECK(coeffs_close(poly_derivative(real_poly({1, 0, 0, -1})), real_poly({3, 0, 0})));
}

TEST_CASE("viete expansion") {
    CHECK(coeffs_close(viete(cplx(2.0), {cplx(1.0), cplx(2.0)}), real_poly({2, -6, 4})));
    CHECK(coeffs_close(viete(cplx(1.0), {cplx(0.0), cplx(0.0), cplx(0.0)}),
                       real_poly({1, 0, 0, 0})));
    const cplx w(std::cos(2.0 * std::numbers::pi / 3.0), std::sin(2.0 * std::numbers::pi / 3.0));
    CHECK(coeffs_close(viete(cplx(1.0), {cplx(1.0), w, w * w}), real_poly({1, 0, 0, -1})));
}

TEST_CASE("root finding") {
    SUBCASE("double root") {
        const auto roots = poly_roots(real_poly({1, -2, 1}));
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(roots[0] - cplx(1.0)) < 1e-6);
        CHECK(roots[0] == roots[1]); // merged to the cluster mean
    }
    SUBCASE("cube roots of unity") {
        const auto roots = poly_roots(real_poly({1, 0, 0, -1}));
        REQUIRE(roots.size() == 3);
        for (const cplx& r : roots) CHECK(std::abs(poly_eval(real_poly({1, 0, 0, -1}), r)) < 1e-12);
    }
    SUBCASE("simple pair") {
        const auto roots = poly_roots(real_poly({1, 0, -1}));
        REQUIRE(roots.size() == 2);
        CHECK(std::abs(std::abs(roots[0]) - 1.0) < 1e-12);
        CHECK(std::abs(roots[0] + roots[1]) < 1e-12);
    }
    SUBCASE("roots at the origin") {
        const auto roots = poly_roots(real_poly({1, -1, 0, 0}));
        REQUIRE(roots.size() == 3);
        int at_zero = 0;
        for (const cplx& r : roots)
            if (std::abs(r) < 1e-12) ++at_zero;
        CHECK(at_zero == 2);
    }
    SUBCASE("degree zero rejected") {
        CHECK_THROWS_AS(poly_roots(real_poly({5})), FormsError);
    }
}

TEST_CASE("roots to viete round trip") {
    Gen gen(101);
    for (int trial = 0; trial < 60; ++trial) {
        const int deg = 2 + gen.pick(11);
        std::vector<cplx> roots;
        while (static_cast<int>(roots.size()) < deg) {
            const cplx r = gen.disk(2.0);
            bool ok = true;
            for (const cplx& other : roots)
                if (std::abs(r - other) < 0.15) ok = false;
            if (ok) roots.push_back(r);
        }
        const cplx lead = gen.annulus(0.5, 2.0);
        const ComplexPoly p = viete(lead, roots);
        const auto found = poly_roots(p);
        const ComplexPoly rebuilt = viete(lead, found);
        double scale = 0.0, err = 0.0;
        for (size_t i = 0; i < p.c.size(); ++i) {
            scale = std::max(scale, std::abs(p.c[i]));
            err = std::max(err, std::abs(p.c[i] - rebuilt.c[i]));
        }
        CHECK(err / scale < 1e-7);
    }
}

TEST_CASE("resultant") {
    CHECK(std::abs(resultant(real_poly({1, -1}), real_poly({1, -1}))) < 1e-12);
    // Sylvester matrix of (z^2 - 1, z) is [[1,0,-1],[1,0,0],[0,1,0]].
    CHECK(std::abs(resultant(real_poly({1, 0, -1}), real_poly({1, 0})) - cplx(-1.0)) < 1e-12);

    Gen gen(103);
    for (int i = 0; i < 100; ++i) {
        const cplx a = gen.disk(2.0), b = gen.disk(2.0);
        if (std::abs(a - b) < 0.05) continue;
        // res(z - a, z - b) = a - b: the product formula lc(P)^deg Q * Q(a).
        const cplx r = resultant(ComplexPoly{{cplx(1.0), -a}}, ComplexPoly{{cplx(1.0), -b}});
        CHECK(std::abs(r - (a - b)) < 1e-10);
    }
}

TEST_CASE("resultant cross-check against the root product formula") {
    Gen gen(107);
    for (int trial = 0; trial < 60; ++trial) {
        const int dp = 1 + gen.pick(5), dq = 1 + gen.pick(5);
        std::vector<cplx> roots_p, roots_q;
        for (int i = 0; i < dp; ++i) roots_p.push_back(gen.annulus(0.3, 1.8));
        for (int i = 0; i < dq; ++i) roots_q.push_back(gen.annulus(0.3, 1.8));
        const cplx lp = gen.annulus(0.5, 1.5), lq = gen.annulus(0.5, 1.5);
        const ComplexPoly p = viete(lp, roots_p), q = viete(lq, roots_q);

        cplx product = std::pow(lp, dq);
        for (const cplx& alpha : roots_p) product *= poly_eval(q, alpha);
        const cplx direct = resultant(p, q);
        CHECK(std::abs(direct - product) <= 1e-7 * std::max(1.0, std::abs(product)));
    }
}

TEST_CASE("discriminant") {
    CHECK(std::abs(discriminant(real_poly({1, -2, 1}))) < 1e-12);
    CHECK(std::abs(discriminant(real_poly({1, 0, -1}))) > 0.5);
    CHECK_FALSE(discriminant_nonzero(real_poly({1, -2, 1})));
    CHECK(discriminant_nonzero(real_poly({1, 0, -1})));

    Gen gen(109);
    for (int i = 0; i < 100; ++i) {
        const cplx b = gen.disk(2.0), c = gen.disk(2.0);
        const cplx disc = discriminant(ComplexPoly{{cplx(1.0), b, c}});
        CHECK(std::abs(disc - (b * b - 4.0 * c)) < 1e-10);
    }

    // Zero exactly on constructed repeated roots, bounded away for separated roots.
    for (int i = 0; i < 40; ++i) {
        const cplx r1 = gen.disk(1.5);
        cplx r2 = gen.disk(1.5);
        while (std::abs(r1 - r2) < 0.1) r2 = gen.disk(1.5);
        CHECK_FALSE(discriminant_nonzero(viete(cplx(1.0), {r1, r1, r2})));
        const cplx d = discriminant(viete(cplx(1.0), {r1, r2}));
        CHECK(std::abs(d) > 1e-4);
    }
}
