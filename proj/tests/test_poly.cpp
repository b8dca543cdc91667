#include <doctest.h>

#include "catalg/factor.hpp"
#include "catalg/poly.hpp"
#include "catalg/errors.hpp"
#include "testutil.hpp"

using namespace catalg;

TEST_CASE("rational arithmetic stays canonical") {
    Rat a(6, -4);
    CHECK(a.num() == -3);
    CHECK(a.den() == 2);
    CHECK((a + Rat(3, 2)).isZero());
    CHECK((Rat(2, 3) * Rat(3, 2)).isOne());
    CHECK(Rat(7, 3).inverse() == Rat(3, 7));
}

TEST_CASE("poly gcd: frozen examples") {
    Poly x = Poly::variable();
    // gcd(x^2-1, x^3-1) = x-1, Euclid by hand
    CHECK(polyGcd(x * x - Poly(1), x * x * x - Poly(1)) == x - Poly(1));
    // gcd(p, 0) = monic(p)
    Poly p = x * x * Rat(3) + Poly(6);
    CHECK(polyGcd(p, Poly::zero()) == p.monic());
    CHECK(polyGcd(Poly::zero(), Poly::zero()).isZero());
    // x^2+1 and x-1 share no root over Q
    CHECK(polyGcd(x * x + Poly(1), x - Poly(1)).isOne());
}

TEST_CASE("poly gcd divides both inputs; Bezout identity re-expands") {
    Rng rng(101);
    for (int iter = 0; iter < 200; ++iter) {
        Poly a = rng.poly(4), b = rng.poly(4);
        Poly g = polyGcd(a, b);
        if (g.isZero()) {
            CHECK(a.isZero());
            CHECK(b.isZero());
            continue;
        }
        CHECK(a.divideExact(g).has_value());
        CHECK(b.divideExact(g).has_value());
        auto [g2, u, v] = polyExtGcd(a, b);
        CHECK(g2 == g);
        CHECK(u * a + v * b == g);
    }
}

TEST_CASE("polyFactor: frozen examples") {
    Poly x = Poly::variable();
    SUBCASE("x^2-1") {
        auto fs = polyFactor(x * x - Poly(1));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].factor == x - Poly(1));
        CHECK(fs[0].multiplicity == 1);
        CHECK(fs[1].factor == x + Poly(1));
        CHECK(fs[1].multiplicity == 1);
    }
    SUBCASE("x^2+1 irreducible") {
        auto fs = polyFactor(x * x + Poly(1));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].factor == x * x + Poly(1));
        CHECK(fs[0].multiplicity == 1);
    }
    SUBCASE("x^3-x^2 = x^2 (x-1)") {
        auto fs = polyFactor(x * x * x - x * x);
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].factor == x);
        CHECK(fs[0].multiplicity == 2);
        CHECK(fs[1].factor == x - Poly(1));
        CHECK(fs[1].multiplicity == 1);
    }
    SUBCASE("degree bound") {
        CHECK_THROWS_AS(polyFactor(x.pow(13)), DegreeBoundExceeded);
    }
    SUBCASE("quartic with quadratic factors") {
        // (x^2+1)(x^2+2): no rational roots, needs the Kronecker search
        auto fs = polyFactor((x * x + Poly(1)) * (x * x + Poly(2)));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].factor == x * x + Poly(1));
        CHECK(fs[1].factor == x * x + Poly(2));
    }
}

TEST_CASE("polyFactor output re-multiplies to the input") {
    Rng rng(202);
    for (int iter = 0; iter < 60; ++iter) {
        Poly p = rng.poly(5);
        if (p.isZero()) continue;
        auto fs = polyFactor(p);
        Poly prod = Poly(p.lc());
        for (const auto& [f, m] : fs) {
            CHECK(f.isMonic());
            CHECK(isIrreducible(f));
            prod = prod * f.pow(m);
        }
        CHECK(prod == p);
    }
}

TEST_CASE("rational functions normalize to lowest terms with monic denominator") {
    Poly x = Poly::variable();
    RatFunc f(x * x - Poly(1), (x - Poly(1)) * Rat(2));
    CHECK(f.num() == (x + Poly(1)) * Rat(1, 2));
    CHECK(f.den().isOne());
    RatFunc g(Poly(1), x);
    CHECK((g * RatFunc(x)).isOne());
    CHECK((g + (-g)).isZero());
    CHECK(g.inverse() == RatFunc(x));
}

TEST_CASE("squarefree and power-divisor helpers") {
    Poly x = Poly::variable();
    CHECK(isSquarefree(x * x - Poly(1)));
    CHECK_FALSE(isSquarefree(x * x));
    CHECK(dividesPowerOf(x * x * x, x));
    CHECK_FALSE(dividesPowerOf(x * (x - Poly(1)), x));
    CHECK(coprimePart(x * x * (x - Poly(1)), x) == x - Poly(1));
}
