#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvesing/mora.hpp"
#include "curvesing/omega.hpp"
#include "curvesing/parser.hpp"

using namespace curvesing;

namespace {

const VariableSet XY{{"x", "y"}};
Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

PuiseuxBranch only_branch(const std::string& s, std::uint64_t precision = 0) {
    PuiseuxOptions opts;
    opts.precision = precision;
    BranchSet b = puiseux_branches(P(s), opts);
    REQUIRE(b.branch_count() == 1);
    return b.branches[0];
}

PuiseuxBranch hand_branch(std::uint64_t e, std::vector<std::pair<std::uint64_t, std::int64_t>> yterms,
                          std::uint64_t trunc) {
    PuiseuxBranch b;
    b.e = e;
    b.trunc = trunc;
    b.y_series = TruncatedSeries(trunc);
    for (auto [k, c] : yterms) b.y_series.set_coeff(k, FieldElem(c));
    return b;
}

std::uint64_t tau_of(const Polynomial& f) {
    auto c = colength(standard_basis({f, f.derivative("x"), f.derivative("y")}));
    REQUIRE(c.has_value());
    return *c;
}
std::uint64_t mu_of(const Polynomial& f) {
    auto c = colength(standard_basis({f.derivative("x"), f.derivative("y")}));
    REQUIRE(c.has_value());
    return *c;
}

}  // namespace

TEST_CASE("pullback of polynomials through branches") {
    PuiseuxBranch cusp = only_branch("y^2 - x^3");
    CHECK(pullback(cusp, P("y^2 - x^3"), 10).is_zero());
    TruncatedSeries x = pullback(cusp, P("x"), 5);
    CHECK(x.order() == std::uint64_t{2});
    CHECK(x.coeff(2) == FieldElem(1));

    PuiseuxBranch hb = hand_branch(4, {{6, 1}, {7, 1}}, 40);
    TruncatedSeries s = pullback(hb, P("y^2 - x^3"), 20);
    CHECK(s.order() == std::uint64_t{13});
    CHECK(s.coeff(13) == FieldElem(2));
    CHECK(s.coeff(14) == FieldElem(1));
    for (std::uint64_t k = 15; k <= 20; ++k) CHECK(s.coeff(k).is_zero());
}

TEST_CASE("form span of the cusp: orders 1..6, codim 1") {
    PuiseuxBranch cusp = only_branch("y^2 - x^3");
    FormSpan s = omega_span(cusp, 6);
    CHECK(s.orders == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6});
    CHECK(s.codim() == 1);
}

TEST_CASE("form span of a smooth branch is everything") {
    PuiseuxBranch line = hand_branch(1, {{1, 1}}, 30);  // (t, t)
    FormSpan s = omega_span(line, 4);
    CHECK(s.orders == std::vector<std::uint64_t>{0, 1, 2, 3, 4});
    CHECK(s.codim() == 0);
}

TEST_CASE("form span of (t^3, t^4): three gaps in 0..12") {
    PuiseuxBranch b = only_branch("y^3 - x^4");
    FormSpan s = omega_span(b, 12);
    CHECK(s.codim() == 3);
    CHECK(!s.order_present(0));
    CHECK(!s.order_present(1));
    CHECK(!s.order_present(4));
}

TEST_CASE("omega codim") {
    CHECK(omega_codim(only_branch("y^2 - x^3")) == 1);
    CHECK(omega_codim(hand_branch(1, {{7, 1}}, 40)) == 0);  // (t, t^7) smooth
    CHECK(omega_codim(only_branch("y^3 - x^4")) == 3);
}

TEST_CASE("span codimension is monotone then constant in the window") {
    PuiseuxBranch b = only_branch("x^5 + x^2*y^3 + y^4", 96);
    std::uint64_t stable = omega_codim(b);
    std::optional<std::uint64_t> prev;
    for (std::uint64_t N = 8; N <= 80; N *= 2) {
        std::uint64_t codim = omega_span(b, N).codim();
        if (prev) CHECK(codim >= *prev);
        prev = codim;
    }
    CHECK(omega_span(b, 40).codim() == stable);
    CHECK(omega_span(b, 80).codim() == stable);
}

TEST_CASE("omega codim equals tau - delta on irreducible germs") {
    for (const char* s : {"y^2 - x^3", "y^3 - x^4", "x^3 + y^4", "x^3 + y^5",
                          "x^5 + x^2*y^3 + y^4", "x^4 + y^5 + x^2*y^3"}) {
        Polynomial f = P(s);
        std::uint64_t tau = tau_of(f), mu = mu_of(f);
        std::uint64_t value = with_precision_retry(f, {}, [&](const BranchSet& b) {
            REQUIRE(b.branch_count() == 1);
            std::uint64_t delta = delta_branch(b.branches[0]);
            std::uint64_t codim = omega_codim(b.branches[0]);
            REQUIRE(2 * delta == mu);  // r = 1
            return codim + delta;
        });
        INFO("germ: " << s);
        CHECK(value == tau);
    }
}

TEST_CASE("equality with delta - r + 1 characterizes mu == tau") {
    for (const char* s : {"y^2 - x^3", "y^3 - x^4", "x^5 + x^2*y^3 + y^4",
                          "x^7 + x^3*y^4 + y^6", "x^4 + y^5 + x^2*y^3"}) {
        Polynomial f = P(s);
        std::uint64_t tau = tau_of(f), mu = mu_of(f);
        bool eq = with_precision_retry(f, {}, [&](const BranchSet& b) {
            std::uint64_t delta = delta_branch(b.branches[0]);
            return omega_codim(b.branches[0]) == delta - b.branch_count() + 1;
        });
        INFO("germ: " << s);
        CHECK(eq == (mu == tau));
    }
}

TEST_CASE("conductor-shift identity") {
    {
        Polynomial f = P("y^2 - x^3");
        PolIdentity r = with_precision_retry(f, {}, [&](const BranchSet& b) {
            return pol_identity_check(f, b);
        });
        CHECK(r.holds);
        CHECK(r.jacobian_codim == 3);  // tau + delta = 2 + 1
    }
    {
        Polynomial f = P("y^3 - x^4");
        PolIdentity r = with_precision_retry(f, {}, [&](const BranchSet& b) {
            return pol_identity_check(f, b);
        });
        CHECK(r.holds);
        CHECK(r.jacobian_codim == 9);  // tau + delta = 6 + 3
    }
    {
        Polynomial f = P("x^5 + x^2*y^3 + y^4");
        PolIdentity r = with_precision_retry(f, {}, [&](const BranchSet& b) {
            return pol_identity_check(f, b);
        });
        CHECK(r.holds);
        CHECK(r.jacobian_codim == 18);  // tau + delta = 12 + 6
    }
    {
        Polynomial f = P("y^2 - x^2");
        BranchSet b = puiseux_branches(f);
        CHECK_THROWS_AS(pol_identity_check(f, b), DomainError);
    }
}
