#include <doctest.h>

#include "findet/field.hpp"
#include "findet/rng.hpp"

using namespace findet;

TEST_CASE("prime field construction validates the modulus") {
    CHECK_NOTHROW(Field::prime_field(2));
    CHECK_NOTHROW(Field::prime_field(101));
    CHECK_NOTHROW(Field::prime_field(2147483629));  // largest prime below 2^31
    CHECK_THROWS_AS(Field::prime_field(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime_field(4), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime_field(91), std::invalid_argument);  // 7 * 13
    CHECK_THROWS_AS(Field::prime_field(std::int64_t{1} << 31), std::invalid_argument);
}

TEST_CASE("characteristic") {
    CHECK(Field::rationals().characteristic() == 0);
    CHECK(Field::prime_field(5).characteristic() == 5);
    CHECK(Field::prime_field(101).characteristic() == 101);
}

TEST_CASE("arithmetic examples") {
    Field f5 = Field::prime_field(5);
    CHECK(FieldElem::from_int(f5, 2) + FieldElem::from_int(f5, 4) == FieldElem::from_int(f5, 1));
    CHECK(FieldElem::from_int(f5, 2) * FieldElem::from_int(f5, 3) == FieldElem::from_int(f5, 1));

    Field q = Field::rationals();
    CHECK(FieldElem::from_fraction(q, 1, 2) + FieldElem::from_fraction(q, 1, 3) ==
          FieldElem::from_fraction(q, 5, 6));

    Field f7 = Field::prime_field(7);
    CHECK(FieldElem::from_int(f7, 3).inv() == FieldElem::from_int(f7, 5));
    CHECK(FieldElem::from_fraction(q, -2, 3).inv() == FieldElem::from_fraction(q, -3, 2));

    // x + 0 = x
    CHECK(FieldElem::from_int(f7, 4) + FieldElem(f7) == FieldElem::from_int(f7, 4));
    CHECK(FieldElem::from_fraction(q, 4, 9) + FieldElem(q) == FieldElem::from_fraction(q, 4, 9));
}

TEST_CASE("errors") {
    Field q = Field::rationals();
    Field f5 = Field::prime_field(5);
    CHECK_THROWS_AS(FieldElem(q).inv(), std::domain_error);
    CHECK_THROWS_AS(FieldElem(f5).inv(), std::domain_error);
    CHECK_THROWS_AS(FieldElem::from_int(q, 1) + FieldElem::from_int(f5, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(FieldElem::from_fraction(q, 1, 0), std::domain_error);
    CHECK_THROWS_AS(FieldElem::from_fraction(f5, 1, 10), std::domain_error);
    CHECK_THROWS_AS(FieldElem::parse(q, "1/0"), std::domain_error);
    CHECK_THROWS_AS(FieldElem::parse(q, "abc"), std::invalid_argument);
}

TEST_CASE("canonical form") {
    Field q = Field::rationals();
    CHECK(FieldElem::from_fraction(q, 2, 4).to_string() == "1/2");
    CHECK(FieldElem::from_fraction(q, 3, -6).to_string() == "-1/2");
    CHECK(FieldElem::from_fraction(q, 6, 3).to_string() == "2");
    // a + (-a) is the canonical zero
    FieldElem a = FieldElem::from_fraction(q, 7, 5);
    CHECK((a + (-a)) == FieldElem(q));
    CHECK((a + (-a)).is_zero());
    Field f5 = Field::prime_field(5);
    CHECK(FieldElem::from_int(f5, -3) == FieldElem::from_int(f5, 2));
    CHECK(FieldElem::parse(f5, "7") == FieldElem::from_int(f5, 2));
    CHECK(FieldElem::parse(q, "-4/6") == FieldElem::from_fraction(q, -2, 3));
}

TEST_CASE("field axioms exhaustively over F_5") {
    Field f5 = Field::prime_field(5);
    std::vector<FieldElem> all;
    for (int i = 0; i < 5; ++i) all.push_back(FieldElem::from_int(f5, i));
    FieldElem zero(f5), one = FieldElem::from_int(f5, 1);
    for (const auto& a : all)
        for (const auto& b : all) {
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            for (const auto& c : all) {
                CHECK((a + b) + c == a + (b + c));
                CHECK((a * b) * c == a * (b * c));
                CHECK(a * (b + c) == a * b + a * c);
            }
        }
    for (const auto& a : all) {
        CHECK(a + zero == a);
        CHECK(a * one == a);
        CHECK((a + (-a)).is_zero());
        if (!a.is_zero()) CHECK(a * a.inv() == one);
    }
}

TEST_CASE("field axioms for random rational triples") {
    Field q = Field::rationals();
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        FieldElem a = FieldElem::from_fraction(q, rng.uniform_int(-50, 50),
                                               rng.uniform_int(1, 30));
        FieldElem b = FieldElem::from_fraction(q, rng.uniform_int(-50, 50),
                                               rng.uniform_int(1, 30));
        FieldElem c = FieldElem::from_fraction(q, rng.uniform_int(-50, 50),
                                               rng.uniform_int(1, 30));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        if (!a.is_zero()) CHECK(a * a.inv() == FieldElem::from_int(q, 1));
    }
}

TEST_CASE("random F_p axioms across several moduli") {
    Rng rng(11);
    for (std::int64_t p : {2, 3, 7, 101, 65537}) {
        Field f = Field::prime_field(p);
        for (int t = 0; t < 50; ++t) {
            FieldElem a = rng.element(f), b = rng.element(f), c = rng.element(f);
            CHECK((a + b) * c == a * c + b * c);
            CHECK(a - b == -(b - a));
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}
