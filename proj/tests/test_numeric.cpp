#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spp/polynomial.hpp"
#include "spp/rational.hpp"

using namespace spp;

TEST_CASE("factorial and integer powers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(1) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == integer("2432902008176640000"));
    CHECK(ipow(3, 0) == 1);
    CHECK(ipow(2, 10) == 1024);
    CHECK(ipow(-2, 3) == -8);
    CHECK(ipow(10, 20) == integer("100000000000000000000"));
}

TEST_CASE("binomial handles negative top arguments via falling factorials") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(-1, 2) == 1);    // (-1)(-2)/2
    CHECK(binomial(-2, 3) == -4);   // (-2)(-3)(-4)/6
    CHECK(binomial(-1, 5) == -1);
    CHECK(binomial(-3, 2) == 6);
}

TEST_CASE("moebius function and divisors") {
    CHECK(moebius_int(1) == 1);
    CHECK(moebius_int(2) == -1);
    CHECK(moebius_int(3) == -1);
    CHECK(moebius_int(4) == 0);
    CHECK(moebius_int(6) == 1);
    CHECK(moebius_int(12) == 0);
    CHECK(moebius_int(30) == -1);
    CHECK(divisors(12) == std::vector<unsigned>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<unsigned>{1});
    CHECK_THROWS_AS(moebius_int(0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic") {
    const polynomial t = polynomial::variable();
    const polynomial p = (t + polynomial(1)) * (t + polynomial(1));
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == 1);
    CHECK(p.coeff(1) == 2);
    CHECK(p.coeff(2) == 1);
    CHECK(p == t * t + rational(2) * t + polynomial(1));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == -1);
    CHECK(p.evaluate(rational(1, 2)) == rational(9, 4));
    CHECK((t.pow(3) - t).evaluate(2) == 6);
    CHECK((-p).coeff(1) == -2);
}

TEST_CASE("division by the variable is exact or rejected") {
    const polynomial t = polynomial::variable();
    const polynomial p = t.pow(3) - rational(2) * t;
    CHECK(p.divide_by_variable() == t * t - polynomial(2));
    CHECK_THROWS_AS((p + polynomial(1)).divide_by_variable(), std::domain_error);
    CHECK(polynomial().divide_by_variable().is_zero());
}

TEST_CASE("interpolation reproduces polynomials exactly") {
    const polynomial t = polynomial::variable();
    const polynomial p = rational(1, 3) * t.pow(3) - rational(5, 2) * t + polynomial(7);
    std::vector<std::pair<rational, rational>> pts;
    for (int k = 1; k <= 4; ++k) pts.emplace_back(k, p.evaluate(k));
    CHECK(polynomial::interpolate(pts) == p);

    // Extrapolation to negative arguments is exact as well.
    CHECK(polynomial::interpolate(pts).evaluate(-2) == p.evaluate(-2));

    // A single point yields a constant.
    CHECK(polynomial::interpolate({{rational(3), rational(9)}}) == polynomial(9));
    CHECK_THROWS_AS(polynomial::interpolate({{rational(1), rational(0)}, {rational(1), rational(1)}}),
                    std::invalid_argument);
}

TEST_CASE("falling-factorial binomials with polynomial tops") {
    const polynomial k = polynomial::variable();
    // binom(k+1, 2) = (k+1)k/2
    CHECK(binom(k + polynomial(1), 2) == rational(1, 2) * (k * k + k));
    CHECK(binom(k, 0) == polynomial(1));
    // Matches the integer binomial on integer arguments, including negatives.
    for (int n = -4; n <= 4; ++n)
        for (unsigned j = 0; j <= 5; ++j)
            CHECK(binom(k, j).evaluate(n) == rational(binomial(n, j)));
}

TEST_CASE("polynomial printing") {
    const polynomial t = polynomial::variable();
    CHECK((t * t - rational(3, 2) * t + polynomial(1)).to_string("t") == "t^2 - 3/2*t + 1");
    CHECK((-t).to_string() == "-t");
    CHECK(polynomial().to_string() == "0");
    CHECK((rational(2) * t.pow(3) - t).to_string("k") == "2*k^3 - k");
}
