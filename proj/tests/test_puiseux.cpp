#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "curvesing/mora.hpp"
#include "curvesing/parser.hpp"
#include "curvesing/puiseux.hpp"

using namespace curvesing;

namespace {

const VariableSet XY{{"x", "y"}};
Polynomial P(const std::string& s) { return parse_polynomial(s, XY); }

std::uint64_t mu_of(const Polynomial& f) {
    auto c = colength(standard_basis({f.derivative(std::size_t{0}), f.derivative(std::size_t{1})}));
    REQUIRE(c.has_value());
    return *c;
}

std::uint64_t delta_of(const Polynomial& f) {
    return with_precision_retry(f, {}, [](const BranchSet& b) { return delta_oracle(b); });
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

}  // namespace

TEST_CASE("newton polygon: cusp, quintic (single edge), degenerate xy") {
    auto e1 = newton_polygon(P("y^2 - x^3"));
    REQUIRE(e1.size() == 1);
    CHECK(e1[0].a0 == 0);
    CHECK(e1[0].b0 == 2);
    CHECK(e1[0].a1 == 3);
    CHECK(e1[0].b1 == 0);
    CHECK(e1[0].p == 2);
    CHECK(e1[0].q == 3);
    CHECK(e1[0].lattice_length == 1);

    // hull of {(5,0),(2,3),(0,4)}: (2,3) lies above the chord (0,4)-(5,0)
    // (4*2+5*3 = 23 > 20), so the polygon is the single edge (0,4)-(5,0)
    auto e2 = newton_polygon(P("x^5 + x^2*y^3 + y^4"));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].a0 == 0);
    CHECK(e2[0].b0 == 4);
    CHECK(e2[0].a1 == 5);
    CHECK(e2[0].b1 == 0);
    CHECK(e2[0].p == 4);
    CHECK(e2[0].q == 5);

    // two genuine edges
    auto e3 = newton_polygon(P("y^3 - x^2*y^2 - x^3*y + x^5"));
    REQUIRE(e3.size() == 2);

    // support {(1,1)} is a single vertex: no compact faces; the axis
    // components are handled by the coordinate pre-pass instead
    CHECK(newton_polygon(P("x*y")).empty());
    CHECK_THROWS_AS(newton_polygon(P("1 + x")), DomainError);
}

TEST_CASE("branches of basic germs") {
    {
        BranchSet b = puiseux_branches(P("y^2 - x^3"));
        REQUIRE(b.branch_count() == 1);
        const auto& br = b.branches[0];
        CHECK(br.e == 2);
        CHECK(br.gamma.is_one());
        CHECK(br.y_series.order() == std::uint64_t{3});
        CHECK(br.field == nullptr);
    }
    {
        BranchSet b = puiseux_branches(P("y^2 - x^2"));
        REQUIRE(b.branch_count() == 2);
        for (const auto& br : b.branches) {
            CHECK(br.e == 1);
            CHECK(br.gamma.is_one());
            REQUIRE(br.y_series.order() == std::uint64_t{1});
        }
        FieldElem c0 = b.branches[0].y_series.coeff(1), c1 = b.branches[1].y_series.coeff(1);
        CHECK(((c0 == FieldElem(1) && c1 == FieldElem(-1)) || (c0 == FieldElem(-1) && c1 == FieldElem(1))));
    }
    {
        BranchSet b = puiseux_branches(P("(y - x^2)*(y^2 - x^3)"));
        REQUIRE(b.branch_count() == 2);
        CHECK(b.branches[0].e == 1);  // (t, t^2)
        CHECK(b.branches[0].y_series.order() == std::uint64_t{2});
        CHECK(b.branches[1].e == 2);  // (t^2, t^3)
        CHECK(b.branches[1].y_series.order() == std::uint64_t{3});
    }
}

TEST_CASE("branch counts through field degrees") {
    CHECK(puiseux_branches(P("x^2 + y^2")).branch_count() == 2);        // conjugate lines
    CHECK(puiseux_branches(P("x^3 - y^3")).branch_count() == 3);        // ordinary triple point
    CHECK(puiseux_branches(P("x^3 + y^4")).branch_count() == 1);        // E6
    CHECK(puiseux_branches(P("x^3 + y^5")).branch_count() == 1);        // E8
    CHECK(puiseux_branches(P("x^5 + x^2*y^3 + y^4")).branch_count() == 1);
    CHECK(puiseux_branches(P("x^5 + y^5 + x^3*y^3")).branch_count() == 5);
    CHECK(puiseux_branches(P("x^2*y + y^4")).branch_count() == 2);      // D5: axis + cusp
    CHECK(puiseux_branches(P("x^3 - x*y^2")).branch_count() == 3);      // D4: three lines
}

TEST_CASE("axis components come from the pre-pass") {
    BranchSet b = puiseux_branches(P("x*y"));
    REQUIRE(b.branch_count() == 2);
    std::set<int> kinds;
    for (const auto& br : b.branches) kinds.insert(static_cast<int>(br.axis));
    CHECK(kinds.count(static_cast<int>(PuiseuxBranch::Axis::x_zero)) == 1);
    CHECK(kinds.count(static_cast<int>(PuiseuxBranch::Axis::y_zero)) == 1);
    CHECK_THROWS_AS(puiseux_branches(P("x^2*y^3")), NonIsolatedError);
}

TEST_CASE("branch count of a product is the sum of the factor counts") {
    auto count = [](const std::string& s) { return puiseux_branches(P(s)).branch_count(); };
    CHECK(count("(y^2 - x^3)*(y - x^2)") == count("y^2 - x^3") + count("y - x^2"));
    CHECK(count("(x^2 + y^2)*(y - x^2)") == count("x^2 + y^2") + count("y - x^2"));
    CHECK(count("(x^3 - y^3)*(y^2 - x^3)") == count("x^3 - y^3") + count("y^2 - x^3"));
}

TEST_CASE("branch values: numerical semigroups") {
    {
        BranchSet b = puiseux_branches(P("y^2 - x^3"));
        auto vals = branch_values(b.branches[0], 7);
        CHECK(vals == std::vector<std::uint64_t>{0, 2, 3, 4, 5, 6, 7});
    }
    {
        BranchSet b = puiseux_branches(P("y^3 - x^4"));
        auto vals = branch_values(b.branches[0], 12);
        CHECK(vals == std::vector<std::uint64_t>{0, 3, 4, 6, 7, 8, 9, 10, 11, 12});
    }
    {
        // hand-built branch (t^4, t^6 + t^7): semigroup <4, 6, 13>
        PuiseuxBranch b = hand_branch(4, {{6, 1}, {7, 1}}, 40);
        auto vals = branch_values(b, 20);
        CHECK(vals == std::vector<std::uint64_t>{0, 4, 6, 8, 10, 12, 13, 14, 16, 17, 18, 19, 20});
        CHECK(delta_branch(b) == 8);  // gaps {1,2,3,5,7,9,11,15}
    }
}

TEST_CASE("value sets are closed under addition") {
    for (const char* s : {"y^2 - x^3", "y^3 - x^4", "x^5 + x^2*y^3 + y^4"}) {
        BranchSet b = puiseux_branches(P(s));
        std::uint64_t bound = std::min<std::uint64_t>(b.branches[0].trunc, 30);
        auto vals = branch_values(b.branches[0], bound);
        std::set<std::uint64_t> vs(vals.begin(), vals.end());
        for (auto u : vals)
            for (auto v : vals)
                if (u + v <= bound) CHECK(vs.count(u + v) == 1);
    }
}

TEST_CASE("delta per branch") {
    CHECK(delta_of(P("y^2 - x^3")) == 1);
    CHECK(delta_of(P("y^3 - x^4")) == 3);
    CHECK(delta_of(P("x^5 + x^2*y^3 + y^4")) == 6);
}

TEST_CASE("intersection multiplicities") {
    PuiseuxBranch par = hand_branch(1, {{2, 1}}, 30);  // (t, t^2)
    CHECK(intersection_multiplicity(par, P("y + x^2")) == 2);
    BranchSet cusp = puiseux_branches(P("y^2 - x^3"));
    CHECK(intersection_multiplicity(cusp.branches[0], P("y")) == 3);
    CHECK_THROWS_AS(intersection_multiplicity(cusp.branches[0], P("y^2 - x^3")), PrecisionError);
}

TEST_CASE("delta oracle on classical germs") {
    CHECK(delta_of(P("y^2 - x^3")) == 1);
    CHECK(delta_of(P("y^2 - x^2")) == 1);
    CHECK(delta_of(P("x^2 + y^2")) == 1);   // conjugate lines
    CHECK(delta_of(P("x^3 - y^3")) == 3);   // three lines
    CHECK(delta_of(P("x^2*y + y^4")) == 3); // D5
    CHECK(delta_of(P("y^4 - 2*x^6")) == 8); // two conjugate cusps
    CHECK(delta_of(P("x^5 + y^5 + x^3*y^3")) == 10);
}

TEST_CASE("mu = 2*delta - r + 1 across two independent pipelines") {
    for (const char* s : {"y^2 - x^3", "y^2 - x^5", "x^2 + y^2", "x^3 - y^3", "x^3 + y^4",
                          "x^3 + y^5", "x^2*y + y^4", "x^3 - x*y^2", "x^5 + x^2*y^3 + y^4",
                          "x^5 + y^5 + x^3*y^3", "y^4 - 2*x^6", "x^4 + y^5 + x^2*y^3"}) {
        Polynomial f = P(s);
        std::uint64_t r = puiseux_branches(f).branch_count();
        std::uint64_t mu = mu_of(f);
        std::uint64_t delta = delta_of(f);
        INFO("germ: " << s);
        CHECK(mu == 2 * delta - r + 1);
    }
}

TEST_CASE("total branch multiplicity equals the germ multiplicity") {
    // soft classical diagnostic: sum over branches of min(ord x, ord y)
    for (const char* s : {"y^2 - x^3", "x^3 - y^3", "x^2*y + y^4", "x^5 + y^5 + x^3*y^3"}) {
        Polynomial f = P(s);
        BranchSet b = puiseux_branches(f);
        std::uint64_t total = 0;
        for (const auto& br : b.branches) {
            auto ox = br.x_order(), oy = br.y_order();
            std::uint64_t mult = ox && oy ? std::min(*ox, *oy) : (ox ? *ox : *oy);
            total += mult;
        }
        CHECK(total == f.order());
    }
}

TEST_CASE("smooth germ has one smooth branch") {
    BranchSet b = puiseux_branches(P("y + x^2 + x*y"));
    REQUIRE(b.branch_count() == 1);
    CHECK(b.branches[0].e == 1);
    CHECK(delta_branch(b.branches[0]) == 0);
}
