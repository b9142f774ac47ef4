#include <doctest.h>

#include "parahex/angle.hpp"
#include "parahex/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

using parahex::AngleDeg;

TEST_CASE("construction reduces and normalizes the sign") {
    AngleDeg a(720, 10);
    CHECK(a.num() == 72);
    CHECK(a.den() == 1);
    AngleDeg b(3, -6);
    CHECK(b.num() == -1);
    CHECK(b.den() == 2);
    CHECK_THROWS_AS(AngleDeg(1, 0), parahex::DomainError);
}

TEST_CASE("parse accepts integers, decimals and fractions") {
    CHECK(AngleDeg::parse("134") == AngleDeg(134));
    CHECK(AngleDeg::parse("134.5") == AngleDeg(269, 2));
    CHECK(AngleDeg::parse("360/7") == AngleDeg(360, 7));
    CHECK(AngleDeg::parse("51.43") == AngleDeg(5143, 100));
    CHECK(AngleDeg::parse("-12.25") == AngleDeg(-49, 4));
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "3/", "/3", "12x"}) {
        CHECK_THROWS_AS(AngleDeg::parse(bad), parahex::DomainError);
    }
}

TEST_CASE("arithmetic is exact") {
    for (int n = 3; n <= 200; ++n) {
        AngleDeg a = parahex::turn_fraction(n);
        AngleDeg b = AngleDeg::half_turn() - AngleDeg(180, n);
        CHECK(a + 2 * b == AngleDeg::full_turn());
        CHECK(a * n == AngleDeg::full_turn());
    }
    CHECK(AngleDeg(1, 3) + AngleDeg(1, 6) == AngleDeg(1, 2));
    CHECK(AngleDeg(360, 7) / 2 == AngleDeg(180, 7));
}

TEST_CASE("ordering compares rationals") {
    CHECK(AngleDeg(1, 3) < AngleDeg(1, 2));
    CHECK(AngleDeg(-1, 2) < AngleDeg(0));
    CHECK(AngleDeg(360, 7) > AngleDeg(51));
    CHECK(AngleDeg(360, 7) < AngleDeg(5143, 100));
}

TEST_CASE("normalized lands in [0, 360)") {
    CHECK(AngleDeg(360).normalized() == AngleDeg(0));
    CHECK(AngleDeg(-90).normalized() == AngleDeg(270));
    CHECK(AngleDeg(725, 2).normalized() == AngleDeg(5, 2));
    CHECK(AngleDeg(-1080, 7).normalized() == AngleDeg(1440, 7));
}

TEST_CASE("formatting") {
    CHECK(AngleDeg(72).to_string() == "72/1");
    CHECK(AngleDeg(360, 7).to_string() == "360/7");
    CHECK(AngleDeg(360, 7).to_fixed(2) == "51.43");
    CHECK(AngleDeg(1080, 7).to_fixed(2) == "154.29");
    CHECK(AngleDeg(315, 2).to_fixed(2) == "157.50");
    CHECK(AngleDeg(1, 8).to_fixed(2) == "0.13");
    CHECK(AngleDeg(-1, 8).to_fixed(2) == "-0.13");
    CHECK(AngleDeg(144).to_fixed(0) == "144");
}

TEST_CASE("trigonometry matches std within 1e-15 and is exact on the 30-degree grid") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> num(-7200, 7200);
    for (int i = 0; i < 500; ++i) {
        AngleDeg a(num(rng), 7);
        double r = a.degrees() * std::numbers::pi / 180.0;
        CHECK(std::abs(a.cos() - std::cos(r)) < 1e-12);
        CHECK(std::abs(a.sin() - std::sin(r)) < 1e-12);
    }
    CHECK(AngleDeg(90).cos() == 0.0);
    CHECK(AngleDeg(180).sin() == 0.0);
    CHECK(AngleDeg(60).cos() == 0.5);
    CHECK(AngleDeg(-270).sin() == 1.0);
}
