#include "doctest.h"

#include "ncp/errors.hpp"
#include "ncp/invariants.hpp"
#include "ncp/series.hpp"

#include <algorithm>
#include <vector>

using namespace ncp;

TEST_CASE("series composition matches the hand expanded degree four term") {
    FormalSeries f({2, 3, 5});
    FormalSeries g({7, 11, 13});
    auto h = compose(f, g);
    REQUIRE(h.order() == 3);
    // x^2: a1 + b1
    CHECK(h.coefficient(1) == 9);
    // x^3: a2 + 2 a1 b1 + b2
    CHECK(h.coefficient(2) == 3 + 2 * 2 * 7 + 11);
    // x^4: a3 + b3 + 2 a1 b2 + 3 a2 b1 + a1 b1^2
    CHECK(h.coefficient(3) == 223);
    CHECK(compose(f, FormalSeries::identity(3)) == f);
    CHECK(compose(FormalSeries::identity(3), f) == f);
}

TEST_CASE("oracle inversion round trips") {
    FormalSeries f({1, -2, Rational(1, 3), 0, 4});
    auto g = invert_oracle(f, 5);
    CHECK(compose(f, g) == FormalSeries::identity(5));
    CHECK(compose(g, f) == FormalSeries::identity(5));
}

TEST_CASE("closed form inversion agrees with the oracle") {
    FormalSeries f({Rational(1, 2), 0, -3, 1, Rational(2, 5), 0, 1, -1});
    CHECK(invert_ncp(f, 8) == invert_oracle(f, 8));
    FormalSeries g({1});
    auto inv = invert_ncp(g, 9);
    for (int n = 1; n <= 9; ++n) {
        Rational expect = catalan(n);
        if (n % 2) expect = -expect;
        CHECK(inv.coefficient(n) == expect);
    }
}

TEST_CASE("profile coefficients reproduce the symbolic inversion patterns") {
    CHECK(lambda_coefficient({1}) == -1);
    CHECK(lambda_coefficient({0, 1}) == -1);
    CHECK(lambda_coefficient({2, 0}) == 2);
    CHECK(lambda_coefficient({1, 1, 0}) == 5);
    CHECK(lambda_coefficient({3, 0, 0}) == -5);
    CHECK(lambda_coefficient({2, 1, 0, 0}) == -21);
    CHECK(lambda_coefficient({4, 0, 0, 0}) == 14);
    CHECK(lambda_coefficient({0, 2, 0, 0}) == 3);
}

TEST_CASE("series orders are guarded") {
    FormalSeries f({1, 1});
    CHECK_THROWS_AS(invert_oracle(f, guards().series_order + 1), OrderOverflow);
    CHECK_THROWS_AS(f.coefficient(3), OrderOverflow);
    CHECK_THROWS_AS(f.coefficient(0), OrderOverflow);
}

TEST_CASE("multinomial assembly of the singleton separation coproduct") {
    for (int n = 0; n <= 6; ++n)
        CHECK(faadibruno_separation(n) == coproduct_separation(singletons(n)));
}

TEST_CASE("surjective coloration table values") {
    auto t = a_table(10, 10);
    REQUIRE(t.size() == 10);
    REQUIRE(t[0].size() == 10);
    CHECK(t[0][0] == 1);
    CHECK(t[0][1] == 0);
    CHECK(t[1][1] == 2);
    CHECK(t[2][2] == 6);
    CHECK(t[1][2] == 1);
    CHECK(t[5][8] == 172168);
    for (int n = 1; n <= 10; ++n) CHECK(t[n - 1][n - 1] == factorial(n));
}

TEST_CASE("closed diagonal forms match the table") {
    auto t = a_table(10, 10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(a_closed_diag0(n) == t[n - 1][n - 1]);
        if (n >= 2) CHECK(a_closed_diag1(n) == Rational(t[n - 2][n - 1]));
        if (n >= 3) CHECK(a_closed_diag2(n) == Rational(t[n - 3][n - 1]));
    }
    CHECK(zeta1(4) == Rational(25, 12));
    CHECK(zeta11(4) == Rational(35, 24));
}

TEST_CASE("ladder polynomials through the table and the invariant") {
    for (int n = 0; n <= 8; ++n) {
        auto p = ladder_polynomial(n);
        CHECK(p == phi_ncp(singletons(n)));
    }
    CHECK(ladder_polynomial(2).to_basis(PolyBasis::monomial).text() == "-X + X^2");
}

TEST_CASE("triangular matrix routines") {
    auto m = riordan_matrix(5);
    CHECK(m[0][0] == 1);
    CHECK(m[2][1] == 2);   // C(2, 1)
    CHECK(m[3][2] == 3);   // C(3, 1)
    CHECK(m[4][2] == 3);   // C(3, 2)
    auto id = tri_mul(m, m);
    CHECK(id[3][3] == 1);

    auto lg = tri_log(m);
    for (std::size_t i = 0; i < lg.size(); ++i) CHECK(lg[i][i] == 0);

    auto polys = riordan_ladder_polynomials(6);
    REQUIRE(polys.size() == 6);
    CHECK(polys[0] == RationalPolynomial::constant(1));
    for (int n = 0; n < 6; ++n) CHECK(polys[n] == ladder_polynomial(n));
}

TEST_CASE("ladder character recursion") {
    CHECK(lambda_ncp_ladder(1) == 1);
    CHECK(lambda_ncp_ladder(2) == -1);
    CHECK(lambda_ncp_ladder(3) == Rational(3, 2));
    CHECK(lambda_ncp_ladder(4) == Rational(-8, 3));
    for (int n = 1; n <= 7; ++n)
        CHECK(lambda_ncp_ladder(n) == lambda_ncp()(singletons(n)));
}

TEST_CASE("ladder values and the zero threshold") {
    CHECK(ladder_value(1, 1) == 1);
    CHECK(ladder_value(2, 2) == 2);
    CHECK(ladder_value(3, 2) == 1);
    CHECK(ladder_value(4, 2) == 0);
    CHECK(ladder_value(4, 3) == ladder_polynomial(4).evaluate(3));

    for (int n = 1; n <= 4; ++n) {
        auto w = threshold_witness(n);
        int len = (1 << n) - 1;
        REQUIRE(static_cast<int>(w.size()) == len);
        CHECK(*std::max_element(w.begin(), w.end()) == n);
        CHECK(is_valid_coloration(singletons(len), w, n));
    }
    CHECK(chromatic_threshold(1) == 1);
    CHECK(chromatic_threshold(2) == 2);
    CHECK(chromatic_threshold(3) == 2);
    CHECK(chromatic_threshold(4) == 3);
    CHECK(chromatic_threshold(7) == 3);
    CHECK(chromatic_threshold(8) == 4);
    CHECK(chromatic_threshold(15) == 4);
    CHECK(chromatic_threshold(16) == 5);
}
