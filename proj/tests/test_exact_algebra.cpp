#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "toric/errors.hpp"
#include "toric/poly.hpp"
#include "toric/rational.hpp"
#include "toric/series.hpp"

using namespace toric;

TEST_CASE("ratio canonicalizes any integer pair") {
    CHECK(ratio(6, 4) == ratio(3, 2));
    CHECK(ratio(-6, 4) == ratio(3, -2));
    CHECK(ratio(0, 7) == Rational(0));
    CHECK(rational_str(ratio(6, -4)) == "-3/2");
    CHECK(rational_str(ratio(14, 2)) == "7");
}

TEST_CASE("integer detection and extraction") {
    CHECK(is_integer(ratio(14, 2)));
    CHECK(!is_integer(ratio(3, 2)));
    CHECK(to_integer(ratio(-20, 4)) == -5);
    CHECK_THROWS_AS(to_integer(ratio(1, 3)), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(6) == 720);
    CHECK(binomial(50, 3) == 19600);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 2) == 1);  // (-1)(-2)/2
}

TEST_CASE("rational round trip through text") {
    for (const char* s : {"0", "7", "-3/2", "116/3", "-1/100000000000000000000"}) {
        CHECK(rational_str(rational_parse(s)) == s);
    }
    CHECK_THROWS_AS(rational_parse("tuesday"), ParseError);
    CHECK_THROWS_AS(rational_parse("1/0"), ParseError);
    CHECK_THROWS_AS(ratio(1, 0), std::invalid_argument);
}

TEST_CASE("poly normal form") {
    CHECK(Poly().is_zero());
    CHECK(Poly().degree() == -1);
    CHECK(Poly(0) == Poly());
    CHECK(Poly::from_coeffs({Rational(3), Rational(0), Rational(0)}).degree() == 0);
    CHECK(Poly::from_coeffs({}) == Poly());
}

TEST_CASE("poly arithmetic and evaluation") {
    Poly n = Poly::variable();
    Poly p = Rational(2) * n * n - Rational(7) * n;
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 0);
    CHECK(p.coeff(1) == -7);
    CHECK(p.coeff(2) == 2);
    CHECK(p.coeff(9) == 0);
    CHECK(p(Rational(25)) == 1075);
    CHECK(p(ratio(1, 2)) == -3);
    CHECK((p - p).is_zero());
    CHECK((p * Poly(1)) == p);
    CHECK((-p)(Rational(3)) == -p(Rational(3)));
    CHECK((ratio(1, 2) * p) == n * n - ratio(7, 2) * n);

    // (N^2 - 3N)/2 takes integer values without integer coefficients.
    Poly half = ratio(1, 2) * (n * n - Rational(3) * n);
    CHECK(!half.has_integer_coeffs());
    CHECK(half.is_integer_valued());
    CHECK(p.has_integer_coeffs());
    Poly third = ratio(1, 3) * n;
    CHECK(!third.is_integer_valued());
}

TEST_CASE("poly printing") {
    Poly n = Poly::variable();
    CHECK(Poly().str() == "0");
    CHECK((Rational(2) * n * n - Rational(7) * n).str() == "2N^2 - 7N");
    CHECK((ratio(3, 2) * n * n + Poly(1)).str() == "(3/2)N^2 + 1");
    CHECK((n - 1).str("x") == "x - 1");
}

TEST_CASE("interpolation recovers the domino pair polynomial") {
    // Sample values of 2N^2 - 7N at N = 25, 36, 49.
    std::vector<std::pair<Rational, Rational>> pts = {
        {Rational(25), Rational(1075)},
        {Rational(36), Rational(2340)},
        {Rational(49), Rational(4459)},
    };
    Poly n = Poly::variable();
    CHECK(poly_interpolate(pts) == Rational(2) * n * n - Rational(7) * n);
}

TEST_CASE("interpolation edge cases") {
    CHECK(poly_interpolate({{Rational(4), ratio(1, 3)}}) == Poly(ratio(1, 3)));
    CHECK_THROWS_AS(
        poly_interpolate({{Rational(1), Rational(1)}, {Rational(1), Rational(2)}}),
        std::invalid_argument);
}

TEST_CASE("series multiplication respects truncation") {
    Series<Rational> a(2);
    a.c = {Rational(1), Rational(1), Rational(0)};  // 1 + x
    Series<Rational> sq = series_mul(a, a);
    CHECK(sq.c == std::vector<Rational>{Rational(1), Rational(2), Rational(1)});
    Series<Rational> fourth = series_pow(a, 4);
    CHECK(fourth.c == std::vector<Rational>{Rational(1), Rational(4), Rational(6)});

    Series<Rational> longer(3);
    CHECK_THROWS_AS(series_mul(a, longer), std::invalid_argument);
}

TEST_CASE("exp of a linear-in-N series") {
    Series<Rational> a(3);
    a.c = {Rational(0), Rational(2), Rational(-7), ratio(116, 3)};
    Series<Poly> q = series_exp_linear(a);
    Poly n = Poly::variable();
    CHECK(q.c[0] == Poly(1));
    CHECK(q.c[1] == Rational(2) * n);
    CHECK(q.c[2] == Rational(2) * n * n - Rational(7) * n);
    CHECK(q.c[3] == ratio(4, 3) * n * n * n - Rational(14) * n * n + ratio(116, 3) * n);

    Series<Rational> at2 = series_eval_at(q, Rational(2));
    CHECK(at2.c[2] == Rational(-6));

    Series<Rational> bad(1);
    bad.c = {Rational(1), Rational(1)};
    CHECK_THROWS_AS(series_exp_linear(bad), std::invalid_argument);
}

TEST_CASE("multinomial identity") {
    for (int k = 0; k <= 6; ++k)
        for (int n = 0; n <= 6; ++n) CHECK(multinomial_identity_check(k, n));
    CHECK_THROWS_AS(multinomial_identity_check(13, 2), GuardError);
    CHECK(multinomial_identity_check(13, 2, Limits::relaxed()));
}
