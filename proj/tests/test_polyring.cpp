#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvesing/parser.hpp"
#include "curvesing/polynomial.hpp"

using namespace curvesing;

namespace {

const VariableSet XY{{"x", "y"}};
const VariableSet XYZ{{"x", "y", "z"}};

Polynomial P(const std::string& s, const VariableSet& v = XY) { return parse_polynomial(s, v); }

struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::uint32_t upto(std::uint32_t n) { return static_cast<std::uint32_t>(next() % (n + 1)); }
};

Monomial rand_mono(Rng& rng, std::size_t nvars, std::uint32_t maxdeg) {
    Monomial m(nvars);
    for (auto& x : m.e) x = rng.upto(maxdeg);
    return m;
}

Polynomial rand_poly(Rng& rng, const VariableSet& vars) {
    Polynomial p(vars);
    std::size_t terms = 1 + rng.upto(4);
    for (std::size_t i = 0; i < terms; ++i) {
        std::int64_t c = static_cast<std::int64_t>(rng.upto(10)) - 5;
        if (c == 0) c = 1;
        p.add_term(rand_mono(rng, vars.size(), 4), Rational(c));
    }
    return p;
}

}  // namespace

TEST_CASE("parse the three-term quintic") {
    Polynomial f = P("x^5 + x^2*y^3 + y^4");
    CHECK(f.term_count() == 3);
    CHECK(f.order() == 4);
    CHECK(f == P("y^4 + x^2*y^3 + x^5"));
}

TEST_CASE("parse expands products") {
    CHECK(P("(x-y)*(x+y)") == P("x^2 - y^2"));
    CHECK(P("(x+y)*(x+y)") == P("x^2 + 2*x*y + y^2"));
    CHECK(P("2*x - 3/2*y") == P("-(3/2*y - 2*x)"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(P("x + "), ParseError);
    try {
        P("x + ");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
    try {
        P("2x");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.pos == 1);  // implicit multiplication is rejected
    }
    try {
        P("x + z^2");
        FAIL("expected throw");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
        CHECK(std::string(e.what()).find("unknown variable 'z'") != std::string::npos);
    }
}

TEST_CASE("ring arithmetic identities") {
    Polynomial f = P("x^5 + x^2*y^3 + y^4");
    CHECK((f + (-f)).is_zero());
    CHECK(f * Polynomial::constant(XY, Rational(1)) == f);
    CHECK_THROWS_AS(P("x") + P("x", XYZ), DomainError);
}

TEST_CASE("partial derivatives") {
    Polynomial f = P("x^3 - y^2");
    CHECK(f.derivative("x") == P("3*x^2"));
    CHECK(f.derivative("y") == P("-2*y"));
    CHECK(P("y^4").derivative("x").is_zero());
    CHECK_THROWS_AS(f.derivative("q"), DomainError);
}

TEST_CASE("order of vanishing") {
    CHECK(P("x^5 + x^2*y^3 + y^4").order() == 4);
    CHECK(P("x^3 - y^2").order() == 2);
    CHECK(P("1 + x").order() == 0);
    CHECK_THROWS_AS(Polynomial(XY).order(), DomainError);
}

TEST_CASE("leading terms under the local order") {
    auto [m1, c1] = P("x^2 + y^3").leading_term();
    CHECK(m1 == Monomial({2, 0}));
    CHECK(c1 == Rational(1));
    auto [m2, c2] = P("y^2 - x^3").leading_term();
    CHECK(m2 == Monomial({0, 2}));
    CHECK(c2 == Rational(1));
    // degree tie broken by reverse lex: smaller exponent at the last
    // differing variable wins, so x^2 beats x*y
    auto [m3, c3] = P("3*x*y + 5*x^2").leading_term();
    CHECK(m3 == Monomial({2, 0}));
    CHECK(c3 == Rational(5));
}

TEST_CASE("local order properties on random monomials") {
    Rng rng{99};
    Monomial one(2);
    for (int i = 0; i < 500; ++i) {
        Monomial a = rand_mono(rng, 2, 6), b = rand_mono(rng, 2, 6), c = rand_mono(rng, 2, 6);
        // totality + antisymmetry
        int ab = local_cmp(a, b);
        CHECK(ab == -local_cmp(b, a));
        if (a != b) CHECK(ab != 0);
        // transitivity
        if (local_cmp(a, b) > 0 && local_cmp(b, c) > 0) CHECK(local_cmp(a, c) > 0);
        // multiplicative
        if (ab > 0) CHECK(local_cmp(a * c, b * c) > 0);
        // 1 is the largest monomial
        if (!a.is_one()) CHECK(local_cmp(one, a) > 0);
    }
}

TEST_CASE("parse of render is identity") {
    Rng rng{123};
    for (int i = 0; i < 100; ++i) {
        Polynomial p = rand_poly(rng, XY);
        CHECK(parse_polynomial(p.to_string(), XY) == p);
    }
    CHECK(parse_polynomial(Polynomial(XY).to_string(), XY).is_zero());
}

TEST_CASE("derivation is linear and satisfies Leibniz") {
    Rng rng{321};
    for (int i = 0; i < 60; ++i) {
        Polynomial f = rand_poly(rng, XY), g = rand_poly(rng, XY);
        for (std::size_t v = 0; v < 2; ++v) {
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
        }
    }
}

TEST_CASE("jacobian minors: plane case lists the partials") {
    Polynomial f = P("x^3 - y^2");
    auto minors = jacobian_minors({f}, XY);
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == f.derivative("x"));
    CHECK(minors[1] == f.derivative("y"));
}

TEST_CASE("jacobian minors: space curve, hand-expanded oracle") {
    Polynomial f1 = P("z^2 - x^3", XYZ);
    Polynomial f2 = P("y^2 - x*z", XYZ);
    auto minors = jacobian_minors({f1, f2}, XYZ);
    REQUIRE(minors.size() == 3);
    // rows (-3x^2, 0, 2z) and (-z, 2y, -x); minors for column pairs
    // {x,y}, {x,z}, {y,z} expanded by hand
    CHECK(minors[0] == P("-6*x^2*y", XYZ));
    CHECK(minors[1] == P("3*x^3 + 2*z^2", XYZ));
    CHECK(minors[2] == P("-4*y*z", XYZ));
}

TEST_CASE("jacobian minors: repeated generator gives zero minors") {
    Polynomial f1 = P("z^2 - x^3", XYZ);
    auto minors = jacobian_minors({f1, f1}, XYZ);
    for (const auto& m : minors) CHECK(m.is_zero());
    CHECK_THROWS_AS(jacobian_minors({f1}, XYZ), DomainError);
}
