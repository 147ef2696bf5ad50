#include <doctest.h>

#include "findet/poly.hpp"
#include "findet/rng.hpp"
#include "test_helpers.hpp"

using namespace findet;
using findet::testing::make_poly;
using findet::testing::random_poly;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("ring arithmetic examples") {
    Poly x = Poly::variable(Q, 2, 0), y = Poly::variable(Q, 2, 1);
    CHECK((x + y) * (x - y) == x * x - y * y);

    Poly f = make_poly(Q, 2, {{3, {2, 1}}, {-1, {0, 0}}, {5, {1, 4}}});
    CHECK(f * Poly::constant(Q, 2, 1) == f);

    Field f2 = Field::prime_field(2);
    Poly u = Poly::variable(f2, 2, 0) + Poly::variable(f2, 2, 1);
    CHECK(u * u == make_poly(f2, 2, {{1, {2, 0}}, {1, {0, 2}}}));  // Frobenius
}

TEST_CASE("mismatched operands are rejected") {
    CHECK_THROWS_AS(Poly::variable(Q, 2, 0) + Poly::variable(Q, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(Poly::variable(Q, 2, 0) + Poly::variable(Field::prime_field(5), 2, 0),
                    std::invalid_argument);
}

TEST_CASE("ord") {
    CHECK(*make_poly(Q, 1, {{1, {2}}, {1, {3}}}).ord() == 2);
    CHECK_FALSE(Poly(Q, 2).ord().has_value());  // Infinity sentinel
    CHECK(*make_poly(Q, 1, {{3, {0}}, {1, {1}}}).ord() == 0);
}

TEST_CASE("partial derivatives") {
    // d(x1^N)/dx1 = N x1^(N-1)
    Poly p = make_poly(Q, 2, {{1, {4, 0}}});
    CHECK(p.partial(0) == make_poly(Q, 2, {{4, {3, 0}}}));

    Field f5 = Field::prime_field(5);
    Poly q = make_poly(f5, 1, {{1, {5}}});
    CHECK(q.partial(0).is_zero());  // char divides the exponent

    Poly xy = make_poly(Q, 2, {{1, {1, 1}}});
    CHECK(xy.partial(1) == Poly::variable(Q, 2, 0));
}

TEST_CASE("truncate") {
    Poly p = make_poly(Q, 1, {{1, {1}}, {1, {3}}});
    CHECK(p.truncate(3) == Poly::variable(Q, 1, 0));
    CHECK(p.truncate(0).is_zero());
    Poly q = make_poly(Q, 1, {{1, {0}}, {1, {1}}, {1, {2}}});
    CHECK(q.truncate(2) == make_poly(Q, 1, {{1, {0}}, {1, {1}}}));
}

TEST_CASE("substitute") {
    Poly x = Poly::variable(Q, 2, 0), y = Poly::variable(Q, 2, 1);
    std::vector<Poly> phi = {x + y * y, y};
    CHECK(x.substitute(phi, 10) == x + y * y);

    std::vector<Poly> shear = {x + y, y};
    CHECK((x * x).substitute(shear, 10) ==
          make_poly(Q, 2, {{1, {2, 0}}, {2, {1, 1}}, {1, {0, 2}}}));

    // identity substitution = truncation
    Poly f = make_poly(Q, 2, {{2, {3, 1}}, {-1, {1, 0}}, {7, {0, 5}}});
    std::vector<Poly> ident = {x, y};
    CHECK(f.substitute(ident, 4) == f.truncate(4));

    std::vector<Poly> unit = {x + Poly::constant(Q, 2, 1), y};
    CHECK_THROWS_AS(f.substitute(unit, 4), std::invalid_argument);
}

TEST_CASE("div_by_monomial") {
    Poly f = make_poly(Q, 2, {{1, {2, 1}}, {1, {3, 0}}});
    CHECK(f.div_by_monomial(Monomial({2, 0})) == make_poly(Q, 2, {{1, {0, 1}}, {1, {1, 0}}}));
    CHECK(Poly(Q, 2).div_by_monomial(Monomial({1, 1})).is_zero());
    CHECK_THROWS_AS(make_poly(Q, 2, {{1, {2, 1}}}).div_by_monomial(Monomial({0, 2})),
                    std::domain_error);
}

TEST_CASE("Leibniz rule on random polynomials") {
    Rng rng(3);
    for (const Field& f : {Q, Field::prime_field(5)}) {
        for (int t = 0; t < 40; ++t) {
            Poly a = random_poly(f, 2, 4, 4, rng);
            Poly b = random_poly(f, 2, 4, 4, rng);
            for (std::size_t v = 0; v < 2; ++v)
                CHECK((a * b).partial(v) == a.partial(v) * b + a * b.partial(v));
        }
    }
}

TEST_CASE("ord is additive over an integral domain") {
    Rng rng(5);
    for (const Field& f : {Q, Field::prime_field(101)}) {
        for (int t = 0; t < 40; ++t) {
            Poly a = random_poly(f, 3, 4, 3, rng);
            Poly b = random_poly(f, 3, 4, 3, rng);
            if (a.is_zero() || b.is_zero()) continue;
            CHECK(*(a * b).ord() == *a.ord() + *b.ord());
        }
    }
}

TEST_CASE("monomial multiple round-trips through division") {
    Rng rng(9);
    for (int t = 0; t < 40; ++t) {
        Poly a = random_poly(Q, 2, 5, 4, rng);
        auto mons = monomials_of_degree(2, static_cast<std::uint32_t>(rng.uniform(4)));
        Monomial m = mons[rng.uniform(mons.size())];
        CHECK(a.mul_monomial(m, FieldElem::from_int(Q, 1)).div_by_monomial(m) == a);
    }
}

TEST_CASE("div_exact inverts multiplication") {
    Rng rng(13);
    for (const Field& f : {Q, Field::prime_field(7)}) {
        for (int t = 0; t < 30; ++t) {
            Poly a = random_poly(f, 2, 3, 3, rng);
            Poly b = random_poly(f, 2, 3, 3, rng);
            if (b.is_zero()) continue;
            CHECK((a * b).div_exact(b) == a);
        }
    }
    CHECK_THROWS_AS(Poly::variable(Q, 1, 0).div_exact(make_poly(Q, 1, {{1, {0}}, {1, {2}}})),
                    std::domain_error);
}

TEST_CASE("term order is degree first, then lexicographic") {
    Monomial x2({2, 0}), xy({1, 1}), y2({0, 2}), x({1, 0});
    CHECK(x < y2);          // degree decides
    CHECK(y2 < xy);         // same degree: (0,2) before (1,1)
    CHECK(xy < x2);
    Poly p = make_poly(Q, 2, {{1, {2, 0}}, {1, {0, 0}}, {1, {1, 1}}});
    std::vector<Monomial> seen;
    for (const auto& [m, c] : p.terms()) seen.push_back(m);
    CHECK(seen[0].is_constant());
    CHECK(seen[1] == xy);
    CHECK(seen[2] == x2);
}
