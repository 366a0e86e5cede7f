#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "curvesing/integer.hpp"
#include "curvesing/rational.hpp"

using curvesing::DomainError;
using curvesing::Integer;
using curvesing::Rational;

namespace {

// splitmix64, also the documented generator of the search tool
struct Rng {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97f4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    std::int64_t small(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rational rand_rational(Rng& rng) {
    std::int64_t n = rng.small(-50, 50);
    std::int64_t d = rng.small(1, 30);
    return Rational(n, d);
}

}  // namespace

TEST_CASE("integer basic arithmetic and radix-crossing values") {
    Integer a = Integer::from_string("123456789012345678901234567890");
    Integer b = Integer::from_string("987654321098765432109876543210");
    CHECK((a + b).to_string() == "1111111110111111111011111111100");
    CHECK((b - a).to_string() == "864197532086419753208641975320");
    CHECK((a * b).to_string() ==
          "121932631137021795226185032733622923332237463801111263526900");
    CHECK((b / a).to_string() == "8");
    CHECK((b % a).to_string() == "9000000000900000000090");
    CHECK((-a).to_string() == "-123456789012345678901234567890");
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(-1000000000).to_string() == "-1000000000");
}

TEST_CASE("integer division matches multiplication (randomized)") {
    Rng rng{42};
    for (int i = 0; i < 300; ++i) {
        Integer a(rng.small(-1000000, 1000000));
        Integer b(rng.small(-1000000, 1000000));
        Integer c(rng.small(1, 99999));
        Integer big = a * b * c + Integer(rng.small(0, 999));
        Integer d = a * c;
        if (d.is_zero()) continue;
        auto [q, r] = Integer::divmod(big, d);
        CHECK(q * d + r == big);
        CHECK(r.abs() < d.abs());
    }
}

TEST_CASE("integer gcd and pow") {
    CHECK(Integer::gcd(Integer(12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(-12), Integer(18)) == Integer(6));
    CHECK(Integer::gcd(Integer(0), Integer(-7)) == Integer(7));
    CHECK(Integer::pow(Integer(3), 20).to_string() == "3486784401");
    Integer big = Integer::pow(Integer(10), 40);
    CHECK(Integer::gcd(big, Integer::pow(Integer(10), 17)) == Integer::pow(Integer(10), 17));
}

TEST_CASE("rat_make canonicalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).den() == Integer(1));
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("rat_arith examples") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(0)).to_string() == "0");
    CHECK(Rational(5, 6) / Rational(5, 6) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
}

TEST_CASE("rat_cmp is a total order consistent with the reals") {
    CHECK(Rational(4, 3) < Rational(2));
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
}

TEST_CASE("field axioms on randomized rationals") {
    Rng rng{7};
    for (int i = 0; i < 200; ++i) {
        Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
    }
}

TEST_CASE("canonical form is idempotent") {
    Rng rng{11};
    for (int i = 0; i < 100; ++i) {
        Rational a = rand_rational(rng);
        Rational again(a.num(), a.den());
        CHECK(again.num() == a.num());
        CHECK(again.den() == a.den());
    }
}

TEST_CASE("string round-trip") {
    Rng rng{13};
    for (int i = 0; i < 100; ++i) {
        Rational a = rand_rational(rng);
        CHECK(Rational::parse(a.to_string()) == a);
    }
    CHECK(Rational::parse("-3/6") == Rational(-1, 2));
    CHECK(Rational::parse("+42") == Rational(42));
    CHECK_THROWS(Rational::parse("1/x"));
}

TEST_CASE("decimal annotation") {
    CHECK(Rational(1).approx_string() == "1.00000");
    CHECK(Rational(10, 9).approx_string() == "1.11111");
    CHECK(Rational(-1, 8).approx_string() == "-1.25000e-1");
    CHECK(Rational(4, 3).approx_string() == "1.33333");
}
