#include <doctest.h>

#include <random>

#include "icfb/rational.hpp"

using namespace icfb;

TEST_CASE("parsing and formatting") {
    CHECK(rat_str(rat_parse("3/6")) == "1/2");
    CHECK(rat_str(rat_parse("-3/6")) == "-1/2");
    CHECK(rat_str(rat_parse("4/1")) == "4");
    CHECK(rat_str(rat_parse("0/17")) == "0");
    CHECK(rat_str(rat_parse("7")) == "7");
    CHECK(rat_parse("1/-2") == make_rat(-1, 2));
    CHECK_THROWS_AS(rat_parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(rat_parse("abc"), std::invalid_argument);
}

TEST_CASE("always lowest terms with positive denominator") {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int k = 0; k < 2000; ++k) {
        int num = d(rng), den = d(rng);
        if (den == 0) continue;
        Rat r = make_rat(num, den);
        CHECK(denominator(r) > 0);
        CHECK(boost::multiprecision::gcd(BigInt(boost::multiprecision::abs(numerator(r))), denominator(r)) <= 1);
        CHECK(rat_parse(rat_str(r)) == r);
    }
}

TEST_CASE("no silent overflow on big values") {
    Rat big = make_rat(BigInt("123456789012345678901234567890"), 7);
    CHECK(rat_str(big * big).size() > 50);
    CHECK(rat_pos(make_rat(-5, 3)) == 0);
    CHECK(rat_abs(make_rat(-5, 3)) == make_rat(5, 3));
}
