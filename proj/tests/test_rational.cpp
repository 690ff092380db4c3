#include <catch2/catch_amalgamated.hpp>

#include "fapx/rational.hpp"

using namespace fapx;

TEST_CASE("make_rat canonicalizes", "[rational]") {
    CHECK(make_rat(6, 8) == make_rat(3, 4));
    CHECK(rat_num(make_rat(6, 8)) == 3);
    CHECK(rat_den(make_rat(6, 8)) == 4);
    CHECK(make_rat(3, -6) == make_rat(-1, 2));
    CHECK(rat_den(make_rat(3, -6)) == 2);
    CHECK(make_rat(-3, -6) == make_rat(1, 2));
    CHECK(make_rat(0, 5) == 0);
    CHECK_THROWS_AS(make_rat(1, 0), ParameterError);
}

TEST_CASE("rat_pow is exact", "[rational]") {
    CHECK(rat_pow(make_rat(2, 3), 3) == make_rat(8, 27));
    CHECK(rat_pow(make_rat(2, 3), 0) == 1);
    CHECK(rat_pow(Rat(0), 0) == 1);
    CHECK(rat_pow(make_rat(-1, 2), 2) == make_rat(1, 4));
    CHECK(rat_pow(make_rat(-1, 2), 3) == make_rat(-1, 8));
    CHECK(rat_pow(Rat(10), 20) == Rat(BigInt("100000000000000000000")));
}

TEST_CASE("floor and ceil", "[rational]") {
    CHECK(rat_floor(make_rat(7, 2)) == 3);
    CHECK(rat_ceil(make_rat(7, 2)) == 4);
    CHECK(rat_floor(make_rat(-7, 2)) == -4);
    CHECK(rat_ceil(make_rat(-7, 2)) == -3);
    CHECK(rat_floor(Rat(5)) == 5);
    CHECK(rat_ceil(Rat(5)) == 5);
    CHECK(rat_floor(Rat(0)) == 0);
}

TEST_CASE("parse_rat accepts integers, fractions and decimals", "[rational]") {
    CHECK(parse_rat("3/4") == make_rat(3, 4));
    CHECK(parse_rat("6/8") == make_rat(3, 4));
    CHECK(parse_rat(" 12 ") == 12);
    CHECK(parse_rat("-5/10") == make_rat(-1, 2));
    CHECK(parse_rat("+5/10") == make_rat(1, 2));
    CHECK(parse_rat("0.25") == make_rat(1, 4));
    CHECK(parse_rat("-1.5") == make_rat(-3, 2));
    CHECK(parse_rat("2.") == 2);
    CHECK(parse_rat(".5") == make_rat(1, 2));
    CHECK(parse_rat("0") == 0);
}

TEST_CASE("parse_rat rejects malformed input", "[rational]") {
    CHECK_THROWS_AS(parse_rat(""), ParseError);
    CHECK_THROWS_AS(parse_rat("  "), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rat("a"), ParseError);
    CHECK_THROWS_AS(parse_rat("1//2"), ParseError);
    CHECK_THROWS_AS(parse_rat("1.2.3"), ParseError);
    CHECK_THROWS_AS(parse_rat("-"), ParseError);
    CHECK_THROWS_AS(parse_rat("."), ParseError);
    CHECK_THROWS_AS(parse_rat("1 2"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/-2"), ParseError);
}

TEST_CASE("rat_to_string uses p/q form", "[rational]") {
    CHECK(rat_to_string(make_rat(5, 2)) == "5/2");
    CHECK(rat_to_string(make_rat(4, 2)) == "2");
    CHECK(rat_to_string(make_rat(-1, 3)) == "-1/3");
    CHECK(rat_to_string(Rat(0)) == "0");
    // round-trip
    CHECK(parse_rat(rat_to_string(make_rat(22, 7))) == make_rat(22, 7));
}

TEST_CASE("bit_width", "[rational]") {
    CHECK(bit_width(0) == 1);
    CHECK(bit_width(1) == 1);
    CHECK(bit_width(2) == 2);
    CHECK(bit_width(3) == 2);
    CHECK(bit_width(4) == 3);
    CHECK(bit_width(8) == 4);
    CHECK(bit_width(255) == 8);
    CHECK(bit_width(256) == 9);
    CHECK(bit_width(BigInt(1) << 64) == 65);
}
