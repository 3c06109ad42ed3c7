#include "doctest.h"

#include "ncp/algebra.hpp"
#include "ncp/errors.hpp"

#include <vector>

using namespace ncp;

namespace {

NoncrossingPartition P(const std::string& s) { return NoncrossingPartition::parse(s); }
Monomial M(const std::string& s) { return Monomial::parse(s); }

} // namespace

TEST_CASE("monomials sort factors and absorb the unit") {
    Monomial m({P("1|2"), P("1"), P("1")});
    CHECK(m.text() == "(1).(1).(1|2)");
    CHECK(m.length() == 3);
    CHECK(m.total_blocks() == 4);
    CHECK(m.total_legs() == 4);

    Monomial with_empty({P(""), P("1,2")});
    CHECK(with_empty.text() == "(1,2)");

    CHECK(Monomial().is_unit());
    CHECK(Monomial().text() == "1");
    CHECK(Monomial(P("")).is_unit());
    CHECK((M("1") * M("(1,2)")) == M("(1,2)"));
    CHECK((M("(1)") * M("(1,3|2)")).text() == "(1).(1,3|2)");
    CHECK(Monomial::parse(m.text()) == m);
}

TEST_CASE("monomial order is factor count first, then factor keys") {
    CHECK(M("1") < M("(1)"));
    CHECK(M("(1|2)") < M("(1).(1)"));
    CHECK(M("(1,2)") < M("(1|2)"));
}

TEST_CASE("algebra elements cancel, parse, and multiply") {
    AlgebraElement x;
    x.add_term(M("(1)"), 1);
    x.add_term(M("(1)"), -1);
    CHECK(x.is_zero());

    auto a = AlgebraElement::parse("-1*(1|2) + 2*(1).(1)");
    CHECK(a.text() == "-1*(1|2) + 2*(1).(1)");
    CHECK(AlgebraElement::parse(a.text()) == a);
    CHECK(a.terms().at(M("(1).(1)")) == 2);

    auto b = AlgebraElement::from(P("1")) * AlgebraElement::from(P("1"));
    CHECK(b == AlgebraElement::from(M("(1).(1)")));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(1, 2)).terms().at(M("(1|2)")) == Rational(-1, 2));
    CHECK(AlgebraElement::unit().text() == "1*1");
}

TEST_CASE("separation coproduct of three singletons") {
    TensorElement expect(2);
    expect.add_term({M("(1|2|3)"), M("1")}, 1);
    expect.add_term({M("1"), M("(1|2|3)")}, 1);
    expect.add_term({M("(1|2)"), M("(1)")}, 3);
    expect.add_term({M("(1)"), M("(1|2)")}, 2);
    expect.add_term({M("(1)"), M("(1).(1)")}, 1);
    CHECK(coproduct_separation(P("1|2|3")) == expect);
}

TEST_CASE("separation coproduct of a nested partition") {
    TensorElement expect(2);
    expect.add_term({M("(1,3|2)"), M("1")}, 1);
    expect.add_term({M("(1,2)"), M("(1)")}, 1);
    expect.add_term({M("1"), M("(1,3|2)")}, 1);
    CHECK(coproduct_separation(P("1,3|2")) == expect);
}

TEST_CASE("fusion coproduct of two singletons") {
    TensorElement expect(2);
    expect.add_term({M("(1|2)"), M("(1).(1)")}, 1);
    expect.add_term({M("(1,2)"), M("(1|2)")}, 1);
    CHECK(coproduct_fusion(P("1|2")) == expect);
}

TEST_CASE("fusion restriction keeps one partition per class") {
    auto t = coproduct_fusion(P("1,4|2|3"));
    for (const auto& [key, c] : t.terms()) {
        CHECK(c == 1);
        CHECK(key[0].length() == 1);
        CHECK(key[0].factors()[0].block_count() == key[1].length());
    }
    // coarse term appears exactly once
    Rational coarse = 0;
    for (const auto& [key, c] : t.terms())
        if (key[0].factors()[0].block_count() == 1) coarse += c;
    CHECK(coarse == 1);
}

TEST_CASE("coproducts are algebra morphisms on a product of partitions") {
    auto x = AlgebraElement::from(P("1|2")) * AlgebraElement::from(P("1,2"));
    auto lhs = coproduct_separation(x);
    auto rhs = coproduct_separation(AlgebraElement::from(P("1|2"))) *
               coproduct_separation(AlgebraElement::from(P("1,2")));
    CHECK(lhs == rhs);
    CHECK(coproduct_fusion(x) ==
          coproduct_fusion(AlgebraElement::from(P("1|2"))) *
              coproduct_fusion(AlgebraElement::from(P("1,2"))));
}

TEST_CASE("counits pick out units and all one block monomials") {
    CHECK(counit_separation(AlgebraElement::unit()) == 1);
    CHECK(counit_separation(AlgebraElement::from(P("1|2"))) == 0);
    CHECK(counit_fusion(M("1")) == 1);
    CHECK(counit_fusion(M("(1,2).(1)")) == 1);
    CHECK(counit_fusion(M("(1|2).(1)")) == 0);
    auto x = AlgebraElement::parse("2*(1,2) + 3*(1|2)");
    CHECK(counit_fusion(x) == 2);
    CHECK(counit_separation(x) == 0);
}

TEST_CASE("counit laws hold for both coproducts on samples") {
    for (const char* s : {"1", "1|2", "1,3|2", "1,4|2,3", "1|2,4|3"}) {
        auto p = P(s);
        AlgebraElement left, right, fleft, fright;
        {
            TensorElement t = coproduct_separation(p);
            for (const auto& [key, c] : t.terms()) {
                if (key[0].is_unit()) left.add_term(key[1], c);
                right.add_term(key[0], c * counit_separation(AlgebraElement::from(key[1])));
            }
            TensorElement f = coproduct_fusion(p);
            for (const auto& [key, c] : f.terms()) {
                fleft.add_term(key[1], c * counit_fusion(key[0]));
                fright.add_term(key[0], c * counit_fusion(key[1]));
            }
        }
        auto one = AlgebraElement::from(p);
        CHECK(left == one);
        CHECK(right == one);
        CHECK(fleft == one);
        CHECK(fright == one);
    }
}

TEST_CASE("iterated reduced separation coproduct") {
    auto x = AlgebraElement::from(P("1|2"));
    auto t1 = reduced_separation_iterate(x, 0);
    CHECK(t1.order() == 1);
    CHECK(t1.terms().at({M("(1|2)")}) == 1);

    auto t2 = reduced_separation_iterate(x, 1);
    CHECK(t2.order() == 2);
    TensorElement expect(2);
    expect.add_term({M("(1)"), M("(1)")}, 2);
    CHECK(t2 == expect);

    CHECK(reduced_separation_iterate(x, 2).is_zero());
    CHECK_THROWS_AS(reduced_separation_iterate(AlgebraElement::unit(), 1), NotAugmentation);
}

TEST_CASE("slot application and the four slot contraction") {
    auto t = coproduct_separation(P("1|2"));
    auto both = apply_to_slot(apply_to_slot(t, 0, &coproduct_fusion), 2, &coproduct_fusion);
    CHECK(both.order() == 4);
    auto c = contract_1_3_24(both);
    CHECK(c.order() == 3);

    auto lhs = apply_to_slot(coproduct_fusion(P("1|2")), 0, &coproduct_separation);
    CHECK(lhs == c);
}

TEST_CASE("cointeraction identity holds on every partition up to 4 legs") {
    for (int n = 0; n <= 4; ++n)
        for (const auto& p : enumerate_ncp(n)) CHECK(check_cointeraction(p));
}

TEST_CASE("gradings add over products") {
    auto g = gradings(M("(1,3|2).(1)"));
    CHECK(g.legs == 4);
    CHECK(g.blocks == 3);
    CHECK(g.length == 2);
    CHECK(g.degree == 1);
    CHECK(gradings(M("1")) == Gradings{});
}

TEST_CASE("tensor text and scaling") {
    TensorElement t(2);
    t.add_term({M("(1)"), M("(1|2)")}, Rational(3, 2));
    CHECK(t.text() == "3/2*(1) (x) (1|2)");
    CHECK(t.scaled(2).terms().begin()->second == 3);
    CHECK(t.scaled(0).is_zero());
}
