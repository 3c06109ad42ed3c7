#include "doctest.h"

#include "ncp/errors.hpp"
#include "ncp/invariants.hpp"

#include <vector>

using namespace ncp;

namespace {

NoncrossingPartition P(const std::string& s) { return NoncrossingPartition::parse(s); }
RationalPolynomial Q(const std::string& s) { return RationalPolynomial::parse(s); }

} // namespace

TEST_CASE("polynomial arithmetic and basis changes") {
    auto p = Q("3/2*X - 5/2*X^2 + X^3");
    CHECK(p.degree() == 3);
    CHECK(p.coefficient(1) == Rational(3, 2));
    CHECK(p.evaluate(2) == 1);
    CHECK(p.text() == "3/2*X - 5/2*X^2 + X^3");
    CHECK(RationalPolynomial::parse(p.text()) == p);

    auto h = p.to_basis(PolyBasis::binomial_falling);
    CHECK(h.text() == "H2 + 6*H3");
    CHECK(h == p);
    CHECK(h.to_basis(PolyBasis::monomial) == p);

    auto x = RationalPolynomial::x();
    CHECK((x * x - x).evaluate(3) == 6);
    CHECK(p.reflected().evaluate(2) == p.evaluate(-2));
    CHECK(RationalPolynomial::zero().degree() == -1);
    CHECK(RationalPolynomial::constant(7).evaluate(100) == 7);
}

TEST_CASE("antidifference telescopes and vanishes at zero") {
    auto p = Q("X^2");
    auto q = p.antidifference();
    CHECK(q.evaluate(0) == 0);
    for (int k = 0; k <= 6; ++k)
        CHECK(q.evaluate(k + 1) - q.evaluate(k) == p.evaluate(k));
    CHECK(RationalPolynomial::constant(1).antidifference() == Q("X"));
}

TEST_CASE("lagrange interpolation reproduces exact data") {
    auto p = lagrange_interpolate({0, 1, 2, 3}, {1, 2, 5, 16});
    CHECK(p.degree() == 3);
    for (auto [x, y] : {std::pair<int, int>{0, 1}, {1, 2}, {2, 5}, {3, 16}})
        CHECK(p.evaluate(x) == y);
}

TEST_CASE("coloration validity on hand checked examples") {
    auto nested = P("1,3|2");
    CHECK(is_valid_coloration(nested, {1, 2}, 2));
    CHECK_FALSE(is_valid_coloration(nested, {2, 1}, 2));
    CHECK_FALSE(is_valid_coloration(nested, {1, 1}, 2));

    auto gap = P("1,3|2|4");
    // blocks: 0={1,3} 1={2} 2={4}; 0 and 2 share a color only if the gap
    // between legs 3 and 4 holds a smaller color, and it is empty
    CHECK_FALSE(is_valid_coloration(gap, {1, 2, 1}, 2));
    CHECK(is_valid_coloration(gap, {1, 2, 2}, 2));

    auto wide = P("1,4|2|3|5");
    // the gap between blocks 0={1,4} and 3={5} is empty as well
    CHECK_FALSE(is_valid_coloration(wide, {1, 2, 2, 1}, 2));
    auto spaced = P("1,2|3|4,5");
    // blocks 0={1,2} and 2={4,5} may share a color thanks to 1={3} below it
    CHECK(is_valid_coloration(spaced, {2, 1, 2}, 2));
    CHECK_FALSE(is_valid_coloration(spaced, {1, 2, 1}, 2));
}

TEST_CASE("coloration counts match the invariant evaluations") {
    CHECK(count_valid_colorations(P("1,3|2"), 3) == 3);
    CHECK(count_valid_colorations(P("1|2"), 3) == 6);
    CHECK(count_valid_colorations(P("1,2"), 5) == 5);
    for (const char* s : {"1,3|2", "1|2|3", "1,4|2,3", "1,3|2|4"}) {
        auto p = P(s);
        auto phi = phi_ncp(p);
        for (int k = 0; k <= 5; ++k)
            CHECK(phi.evaluate(k) == Rational(count_valid_colorations(p, k)));
    }
    CHECK(count_valid_colorations(Monomial({P("1"), P("1")}), 3) == 9);
}

TEST_CASE("the three routes to the universal invariant agree") {
    for (const char* s : {"", "1", "1|2", "1,3|2", "1|2|3", "1,4|2|3", "1|2,4|3"}) {
        auto p = P(s);
        auto a = phi_ncp(p, PhiAlgorithm::coproduct);
        auto b = phi_ncp(p, PhiAlgorithm::recurrence);
        auto c = phi_ncp(p, PhiAlgorithm::interpolation);
        CHECK(a == b);
        CHECK(b == c);
    }
    CHECK(phi_ncp(P("1|2|3")) == Q("3/2*X - 5/2*X^2 + X^3"));
    CHECK(phi_ncp(P("1")) == Q("X"));
    CHECK(phi_ncp(P("1,2")) == Q("X"));
    CHECK(phi_ncp(P("")) == RationalPolynomial::constant(1));
}

TEST_CASE("the universal invariant is multiplicative and linear") {
    auto m = Monomial({P("1|2"), P("1,3|2")});
    CHECK(phi_ncp(m) == phi_ncp(P("1|2")) * phi_ncp(P("1,3|2")));
    auto x = AlgebraElement::parse("2*(1) + -3*(1|2)");
    CHECK(phi_ncp(x) == phi_ncp(P("1")).scaled(2) - phi_ncp(P("1|2")).scaled(3));
    auto inv = phi_invariant();
    CHECK(inv(m) == phi_ncp(m));
    CHECK(inv.name() == "phi");
}

TEST_CASE("universal invariant special evaluations") {
    auto eps = eps_fusion_char();
    auto mu = mu_ncp();
    for (int n = 0; n <= 5; ++n) {
        for (const auto& p : enumerate_ncp(n)) {
            auto phi = phi_ncp(p);
            CHECK(phi.evaluate(0) == (n == 0 ? 1 : 0));
            CHECK(phi.evaluate(1) == eps(p));
            CHECK(phi.evaluate(-1) == mu(p));
        }
    }
}

TEST_CASE("extension invariants on hand checked partitions") {
    auto weak = lambda_invariant();
    auto strict = lambda_strict_invariant();
    auto nested = Monomial(P("1,3|2"));
    CHECK(weak(nested) == Q("1/2*X + 1/2*X^2"));
    CHECK(strict(nested) == Q("-1/2*X + 1/2*X^2"));
    CHECK(weak(Monomial(P("1|2|3"))) == Q("X^3"));
    CHECK(weak(Monomial(P("1,2|3"))) == Q("X^2"));
    CHECK(extension_invariant(Monomial(), false) == RationalPolynomial::constant(1));
}

TEST_CASE("extension counts match evaluation at integers") {
    for (const char* s : {"1,3|2", "1,4|2|3", "1|2,4|3", "1,3|2|4"}) {
        Monomial m(P(s));
        for (int k = 0; k <= 4; ++k) {
            CHECK(Rational(count_extensions(m, k, false)) ==
                  extension_invariant(m, false).evaluate(k));
            CHECK(Rational(count_extensions(m, k, true)) ==
                  extension_invariant(m, true).evaluate(k));
        }
    }
}

TEST_CASE("weak and strict extensions are reflections of one another") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& p : enumerate_ncp(n)) {
            Monomial m(p);
            auto weak = extension_invariant(m, false);
            auto strict = extension_invariant(m, true);
            auto flipped = strict.reflected().scaled((p.block_count() % 2) ? -1 : 1);
            CHECK(weak == flipped);
        }
    }
}

TEST_CASE("strict extensions satisfy the base peeling recurrence") {
    for (const char* s : {"1", "1,3|2", "1,4|2|3", "1|2|3", "1,2|3,6|4,5"}) {
        auto p = P(s);
        auto lhs = extension_invariant(Monomial(p), true);
        auto base = base_blocks(p);
        int bsize = static_cast<int>(base.size());
        for (int x = 0; x <= p.block_count() + 2; ++x) {
            Rational total = 0;
            for (int mask = 0; mask < (1 << bsize); ++mask) {
                std::vector<int> keep;
                for (int b = 0; b < p.block_count(); ++b) {
                    bool dropped = false;
                    for (int i = 0; i < bsize; ++i)
                        if ((mask >> i & 1) && base[i] == b) dropped = true;
                    if (!dropped) keep.push_back(b);
                }
                Monomial rest(restrict_blocks(p, keep));
                total += extension_invariant(rest, true).evaluate(x);
            }
            CHECK(lhs.evaluate(x + 1) == total);
        }
    }
}

TEST_CASE("base invariant scales powers by linear extensions") {
    CHECK(phi_zero(Monomial(P("1,3|2"))) == Q("1/2*X^2"));
    CHECK(phi_zero(Monomial(P("1,3|2|4"))) == Q("1/2*X^3"));
    CHECK(phi_zero(Monomial()) == RationalPolynomial::constant(1));
    CHECK(phi_zero_invariant()(P("1|2")) == Q("X^2"));
}

TEST_CASE("character actions recover the named invariants") {
    auto phi = phi_invariant();
    for (int n = 0; n <= 4; ++n) {
        for (const auto& p : enumerate_ncp(n)) {
            CHECK(act_character(phi, lambda_all_one())(p) ==
                  lambda_invariant()(p));
            CHECK(act_character(phi, lambda_strict())(p) ==
                  lambda_strict_invariant()(p));
            CHECK(act_character(phi_zero_invariant(), lambda_ncp())(p) == phi_ncp(p));
        }
    }
}

TEST_CASE("antipode expansions and algebra morphism property") {
    CHECK(antipode(P("1")) == AlgebraElement::parse("-1*(1)"));
    CHECK(antipode(P("1|2")) == AlgebraElement::parse("-1*(1|2) + 2*(1).(1)"));
    CHECK(antipode(P("1,2")) == AlgebraElement::parse("-1*(1,2)"));

    Monomial m({P("1|2"), P("1")});
    CHECK(antipode(m) == antipode(P("1|2")) * antipode(P("1")));
    auto x = AlgebraElement::parse("3*(1) + -1*(1|2)");
    CHECK(antipode(x) == antipode(P("1")).scaled(3) - antipode(P("1|2")));
    CHECK(antipode(AlgebraElement::unit()) == AlgebraElement::unit());
}

TEST_CASE("antipode squares to the identity up to 5 legs") {
    for (int n = 0; n <= 5; ++n)
        for (const auto& p : enumerate_ncp(n))
            CHECK(antipode(antipode(p)) == AlgebraElement::from(p));
}

TEST_CASE("coefficient identities hold and report their closed values") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& p : enumerate_ncp(n)) {
            for (const auto& check : coefficient_checks(p)) {
                CAPTURE(p.text());
                CAPTURE(check.id);
                CHECK(check.pass);
                CHECK(check.expected == check.actual);
            }
        }
    }
    auto checks = coefficient_checks(P("1|2|3"));
    REQUIRE(checks.size() == 4);
    CHECK(checks[0].id == "degree");
    CHECK(checks[0].actual == 3);
    CHECK(checks[1].id == "leading");
    CHECK(checks[1].actual == 1);
}

TEST_CASE("coloration budget guard raises on exhaustion") {
    auto saved = guards().coloration_budget;
    guards().coloration_budget = 10;
    CHECK_THROWS_AS(phi_ncp(P("1|2|3|4"), PhiAlgorithm::interpolation), DegreeOverflow);
    guards().coloration_budget = saved;
    CHECK(phi_ncp(P("1|2|3|4"), PhiAlgorithm::interpolation) ==
          phi_ncp(P("1|2|3|4"), PhiAlgorithm::recurrence));
}
