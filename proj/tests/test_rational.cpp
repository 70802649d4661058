#include "doctest.h"
#include "wd/error.hpp"
#include "wd/rational.hpp"

using namespace wd;

TEST_CASE("string round trip") {
    CHECK(rat_from_string("3/4") == rat(3, 4));
    CHECK(rat_from_string("-2") == rat(-2));
    CHECK(rat_from_string("0") == rat(0));
    CHECK(rat_from_string("-6/8") == rat(-3, 4));
    CHECK(rat_to_string(rat(4, 8)) == "1/2");
    CHECK(rat_to_string(rat(-3)) == "-3");
    CHECK(rat_to_string(rat(2, -4)) == "-1/2");
    CHECK(rat_to_string(rat(0)) == "0");
    CHECK_THROWS_AS(rat_from_string("1/0"), ParseError);
    CHECK_THROWS_AS(rat_from_string("abc"), ParseError);
    CHECK_THROWS_AS(rat_from_string(""), ParseError);
}

TEST_CASE("integrality") {
    CHECK(is_integer(rat(6, 3)));
    CHECK_FALSE(is_integer(rat(1, 2)));
    CHECK(rat_as_long(rat(-7)) == -7);
    CHECK_FALSE(rat_as_long(rat(1, 3)).has_value());
}

TEST_CASE("powers") {
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(1, 2), -2) == rat(4));
    CHECK(rat_pow(rat(5), 0) == rat(1));
    CHECK(rat_pow(rat(-2), 3) == rat(-8));
    CHECK_THROWS_AS(rat_pow(rat(0), -1), ZeroScale);
}

TEST_CASE("exact roots") {
    CHECK(rational_sqrt(rat(9, 4)) == rat(3, 2));
    CHECK(rational_sqrt(rat(0)) == rat(0));
    CHECK_FALSE(rational_sqrt(rat(2)).has_value());
    CHECK_FALSE(rational_sqrt(rat(-1)).has_value());
    CHECK(rational_nth_root(rat(27, 8), 3) == rat(3, 2));
    CHECK(rational_nth_root(rat(-27), 3) == rat(-3));
    CHECK_FALSE(rational_nth_root(rat(-4), 2).has_value());
    CHECK(rational_nth_root(rat(16), 4) == rat(2));
}

TEST_CASE("factorisation") {
    auto f = factor_integer(Integer(360));
    REQUIRE(f.has_value());
    REQUIRE(f->size() == 3);
    CHECK((*f)[0] == std::pair<Integer, unsigned>{Integer(2), 3u});
    CHECK((*f)[1] == std::pair<Integer, unsigned>{Integer(3), 2u});
    CHECK((*f)[2] == std::pair<Integer, unsigned>{Integer(5), 1u});

    auto p = factor_integer(Integer(1000003));
    REQUIRE(p.has_value());
    REQUIRE(p->size() == 1);
    CHECK((*p)[0].first == Integer(1000003));

    auto d = divisors(Integer(12), 100);
    REQUIRE(d.has_value());
    CHECK(*d == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK_FALSE(divisors(Integer(720720), 4).has_value());
}
