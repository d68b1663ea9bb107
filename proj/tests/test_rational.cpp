#include <doctest.h>

#include "ccs/rational.hpp"

using namespace ccs;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(10, 6) == 210);
    CHECK(binomial(120, 2) == 7140);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    // Pascal identity on a small triangle.
    for (int n = 1; n < 20; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("multinomial") {
    CHECK(multinomial({BigInt(2), BigInt(2)}) == 6);
    CHECK(multinomial({BigInt(1), BigInt(1), BigInt(1)}) == 6);
    CHECK(multinomial({BigInt(3)}) == 1);
    CHECK_THROWS_AS(multinomial({BigInt(-1)}), input_error);
}

TEST_CASE("checked_pow and budget") {
    CHECK(checked_pow(2, 6) == 64);
    CHECK(checked_pow(7, 0) == 1);
    CHECK_THROWS_AS(checked_pow(10, 1000, 64), resource_error);
}

TEST_CASE("ceil_rat") {
    CHECK(ceil_rat(Rat(7, 2)) == 4);
    CHECK(ceil_rat(Rat(8, 2)) == 4);
    CHECK(ceil_rat(Rat(-7, 2)) == -3);
    CHECK(ceil_rat(Rat(0)) == 0);
}

TEST_CASE("rational string round trips") {
    CHECK(rat_to_string(Rat(33, 34)) == "33/34");
    CHECK(rat_to_string(Rat(4)) == "4");
    CHECK(rat_from_string("33/34") == Rat(33, 34));
    CHECK(rat_from_string("0.25") == Rat(1, 4));
    CHECK(rat_from_string("-0.5") == Rat(-1, 2));
    CHECK(rat_from_string("7") == Rat(7));
    CHECK_THROWS_AS(rat_from_string("1/0"), input_error);
    CHECK_THROWS_AS(rat_from_string("abc"), input_error);
}
