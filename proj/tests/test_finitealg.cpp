#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvesing/parser.hpp"
#include "curvesing/quotient.hpp"

using namespace curvesing;

namespace {

const VariableSet XY{{"x", "y"}};

Polynomial P(const std::string& s, const VariableSet& v = XY) { return parse_polynomial(s, v); }

QuotientAlgebra milnor_algebra(const Polynomial& f) {
    return QuotientAlgebra(standard_basis({f.derivative(std::size_t{0}), f.derivative(std::size_t{1})}));
}

}  // namespace

TEST_CASE("quotient algebra bases") {
    QuotientAlgebra a(standard_basis({P("x^2"), P("y")}));
    CHECK(a.dimension() == 2);
    REQUIRE(a.basis().size() == 2);
    CHECK(a.basis()[0].is_one());
    CHECK(a.basis()[1] == Monomial({1, 0}));

    CHECK_THROWS_AS(QuotientAlgebra(standard_basis({P("x^2")})), NonIsolatedError);
}

TEST_CASE("Milnor algebra of the octic from a 16-dimensional box") {
    Polynomial f = P("x^5 + y^5 + x^3*y^3");
    QuotientAlgebra a = milnor_algebra(f);
    CHECK(a.dimension() == 16);
    for (const auto& m : a.basis()) {
        CHECK(m.e[0] <= 3);
        CHECK(m.e[1] <= 3);
    }
}

TEST_CASE("normal form vectors") {
    QuotientAlgebra a(standard_basis({P("x^2"), P("y")}));
    auto zero = a.nf_vector(P("x^3"));
    CHECK(zero == std::vector<Rational>{Rational(0), Rational(0)});
    auto onex = a.nf_vector(P("1 + x"));
    CHECK(onex == std::vector<Rational>{Rational(1), Rational(1)});
    auto y2 = a.nf_vector(P("y^2"));
    CHECK(y2 == std::vector<Rational>{Rational(0), Rational(0)});
}

TEST_CASE("normal form is linear and respects the ideal") {
    Polynomial f = P("x^5 + x^2*y^3 + y^4");
    QuotientAlgebra a = milnor_algebra(f);
    Polynomial g1 = P("3 + x*y - 2*x^2*y^2"), g2 = P("x^3 + 7*y^3");
    auto v1 = a.nf_vector(g1), v2 = a.nf_vector(g2), vsum = a.nf_vector(g1 + g2);
    for (std::size_t i = 0; i < a.dimension(); ++i) CHECK(vsum[i] == v1[i] + v2[i]);
    // elements of the ideal map to zero
    Polynomial in_ideal = P("x*y") * f.derivative("x") - P("y^2 - 3") * f.derivative("y");
    for (const auto& c : a.nf_vector(in_ideal)) CHECK(c.is_zero());
}

TEST_CASE("kernel of multiplication by f computes tau") {
    {
        Polynomial f = P("x^3 - y^2");
        QuotientAlgebra a = milnor_algebra(f);
        CHECK(a.dimension() == 2);
        CHECK(multiplication_kernel_dim(f, a) == 2);  // quasihomogeneous: tau = mu
        CHECK(principal_ideal_dim(f, a) == 0);
    }
    {
        Polynomial f = P("x^5 + x^2*y^3 + y^4");
        QuotientAlgebra a = milnor_algebra(f);
        CHECK(multiplication_kernel_dim(f, a) == 12);
        CHECK(principal_ideal_dim(f, a) == 0);
    }
    {
        Polynomial f = P("x^7 + x^3*y^4 + y^6");
        QuotientAlgebra a = milnor_algebra(f);
        CHECK(a.dimension() == 30);
        CHECK(multiplication_kernel_dim(f, a) == 27);
        CHECK(principal_ideal_dim(f, a) == 3);  // mu - tau = 30 - 27
    }
}

TEST_CASE("rank plus nullity is the dimension") {
    for (const char* s : {"x^3 - y^2", "x^5 + y^5 + x^3*y^3", "x^4 + y^5 + x^2*y^3"}) {
        Polynomial f = P(s);
        QuotientAlgebra a = milnor_algebra(f);
        CHECK(multiplication_rank(f, a) + multiplication_kernel_dim(f, a) == a.dimension());
    }
}

TEST_CASE("the inclusion <f> in ker m_f is strict for singular germs") {
    // dim ker - dim <f> = 2 tau - mu, strictly positive whenever mu > 0
    for (const char* s : {"x^3 - y^2", "x^5 + x^2*y^3 + y^4", "x^7 + x^3*y^4 + y^6",
                          "x^5 + y^5 + x^3*y^3", "x^4 + y^5 + x^2*y^3", "x^2*y + y^4"}) {
        Polynomial f = P(s);
        QuotientAlgebra a = milnor_algebra(f);
        std::size_t ker = multiplication_kernel_dim(f, a);
        std::size_t img = principal_ideal_dim(f, a);
        INFO("germ: " << s);
        CHECK(ker > img);
        CHECK(ker - img == 2 * ker - a.dimension());  // 2 tau - mu with ker = tau
    }
}

TEST_CASE("jet colength oracle") {
    CHECK(jet_colength_oracle({P("x^2"), P("y^3")}, 8) == std::uint64_t{6});
    Polynomial cusp = P("x^3 - y^2");
    CHECK(jet_colength_oracle({cusp.derivative("x"), cusp.derivative("y")}, 6) == std::uint64_t{2});
    CHECK(!jet_colength_oracle({P("x^2")}, 9).has_value());
    CHECK(!jet_colength_oracle({P("x^2")}, 25).has_value());
}

TEST_CASE("jet oracle agrees with the Mora colength") {
    std::vector<IdealBasis> ideals;
    for (const char* s : {"x^3 - y^2", "x^5 + x^2*y^3 + y^4", "x^5 + y^5 + x^3*y^3",
                          "x^3 - x*y^2", "x^2*y + y^4"}) {
        Polynomial f = P(s);
        ideals.push_back({f.derivative("x"), f.derivative("y")});
        ideals.push_back({f, f.derivative("x"), f.derivative("y")});
    }
    for (const auto& ideal : ideals) {
        auto mora = colength(standard_basis(ideal));
        REQUIRE(mora.has_value());
        auto jet = jet_colength_oracle(ideal, 2 * *mora + 4);
        REQUIRE(jet.has_value());
        CHECK(*jet == *mora);
    }
}
