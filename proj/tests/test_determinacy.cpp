#include <doctest.h>

#include "findet/determinacy.hpp"
#include "findet/experiments.hpp"
#include "test_helpers.hpp"

using namespace findet;
using findet::testing::corner_x;
using findet::testing::diag_xy;
using findet::testing::make_matrix;
using findet::testing::make_poly;
using findet::testing::symm_xy;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("ord_matrix") {
    CHECK(ord_matrix(diag_xy(Q)) == 1);

    Rng rng(31);
    GenericSpec spec{2, 4, Field::prime_field(101)};
    CHECK(ord_matrix(build_generic_b(spec, rng)) == 4);

    PolyMatrix a = make_matrix(Q, 1,
                               {{make_poly(Q, 1, {{1, {3}}}), make_poly(Q, 1, {{1, {2}}})},
                                {make_poly(Q, 1, {{1, {4}}}), make_poly(Q, 1, {{1, {5}}})}});
    CHECK(ord_matrix(a) == 2);

    CHECK_THROWS_AS(ord_matrix(PolyMatrix(2, 2, Q, 2)), std::invalid_argument);
}

TEST_CASE("determinacy bound formula") {
    CHECK(determinacy_bound(2, 1) == 5);
    CHECK(determinacy_bound(0, 1) == 1);
    CHECK(determinacy_bound(12, 3) == 23);
    CHECK_THROWS_AS(determinacy_bound(2, 0), std::invalid_argument);
}

TEST_CASE("check on diag(x,y)") {
    DeterminacyReport rep = check(diag_xy(Q), 30);
    CHECK(rep.verdict == DeterminacyReport::Verdict::FinitelyDetermined);
    CHECK(rep.consistent);
    CHECK(rep.ord_a == 1);
    CHECK(rep.d.is_finite());
    CHECK(rep.d.codim == 0);
    CHECK(rep.d_e.is_finite());
    CHECK(rep.d_e.codim == 2);
    CHECK(rep.bound_ii == 5);
    REQUIRE(rep.k_min.has_value());
    CHECK(*rep.k_min == 2);  // I_4(Theta) = m^2 for diag(x,y)
    CHECK(rep.bound_iii == 5);
}

TEST_CASE("check on the uncovered-corner matrix") {
    DeterminacyReport rep = check(corner_x(Q), 12);
    CHECK(rep.verdict == DeterminacyReport::Verdict::NotDeterminedUpToCap);
    CHECK(rep.consistent);  // all three criteria inconclusive
    CHECK_FALSE(rep.d.is_finite());
    CHECK_FALSE(rep.d_e.is_finite());
    CHECK_FALSE(rep.ideal.is_finite());
    CHECK_FALSE(rep.k_min.has_value());
    CHECK_FALSE(rep.bound_i.has_value());
}

TEST_CASE("check on a generic B uses criterion (iii)") {
    Rng rng(33);
    GenericSpec spec{2, 3, Field::prime_field(101)};
    PolyMatrix b = build_generic_b(spec, rng);
    DeterminacyReport rep = check(b, 30);
    CHECK(rep.verdict == DeterminacyReport::Verdict::FinitelyDetermined);
    CHECK(rep.consistent);
    CHECK(rep.ord_a == 3);
    REQUIRE(rep.k_min.has_value());
    CHECK(rep.bound_iii == 2 * static_cast<std::int64_t>(*rep.k_min) - 3 + 2);
}

TEST_CASE("frozen regression: fixed generic B over F_101") {
    // Values computed twice: by this engine and by an independent dense
    // Gauss-Jordan implementation on the same coefficients.
    Field f101 = Field::prime_field(101);
    auto form = [&](long long c1, long long c2) {
        return make_poly(f101, 2, {{c1, {3, 0}}, {c2, {0, 3}}});
    };
    PolyMatrix b = make_matrix(f101, 2, {{form(82, 15), form(36, 32)},
                                         {form(4, 95), form(29, 18)}});
    DeterminacyReport rep = check(b, 30);
    CHECK(rep.d.codim == 32);
    CHECK(rep.d.stab_degree == 6);
    CHECK(rep.d_e.codim == 34);
    CHECK(rep.d_e.stab_degree == 6);
    CHECK(rep.ideal.codim == 67);
    CHECK(rep.ideal.stab_degree == 12);
    CHECK(rep.k_min == 12);
    CHECK(rep.bound_iii == 23);
}

TEST_CASE("one power series: the classical 1x1 case") {
    // T^e(x^k) = <x^k, k x^(k-1)> = <x^(k-1)> in char 0, so d_e = k - 1
    for (std::uint32_t k : {2u, 3u, 5u}) {
        PolyMatrix a(1, 1, Q, 1);
        a.set(0, 0, make_poly(Q, 1, {{1, {k}}}));
        DeterminacyReport rep = check(a, 30);
        CHECK(rep.verdict == DeterminacyReport::Verdict::FinitelyDetermined);
        CHECK(rep.d_e.codim == k - 1);
        CHECK(rep.consistent);
    }
    // char p | k: the derivative dies and x^k alone is not finite... the
    // E-products still give <x^k>, an Artinian ideal, so d_e = k
    Field f5 = Field::prime_field(5);
    PolyMatrix a5(1, 1, f5, 1);
    a5.set(0, 0, make_poly(f5, 1, {{1, {5}}}));
    DeterminacyReport rep5 = check(a5, 30);
    CHECK(rep5.d_e.codim == 5);
}

TEST_CASE("three-variable rational end-to-end run") {
    Rng rng(63);
    PolyMatrix b = build_generic_b(GenericSpec{3, 3, Q}, rng);
    DeterminacyReport rep = check(b, 20);
    CHECK(rep.verdict == DeterminacyReport::Verdict::FinitelyDetermined);
    CHECK(rep.consistent);
    CHECK(rep.ord_a == 3);
    REQUIRE(rep.d_e.is_finite());
    // Nakayama soundness at depth over Q
    CHECK(span_codim_at(tangent_image_gens(b, true), rep.d_e.stab_degree + 2, 0) ==
          rep.d_e.codim);
}

TEST_CASE("rectangular matrices are accepted") {
    PolyMatrix a(2, 1, Q, 2);
    a.set(0, 0, Poly::variable(Q, 2, 0));
    a.set(1, 0, Poly::variable(Q, 2, 1));
    DeterminacyReport rep = check(a, 20);
    CHECK(rep.verdict == DeterminacyReport::Verdict::FinitelyDetermined);
    CHECK(rep.consistent);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(check(PolyMatrix(2, 2, Q, 2), 10), std::invalid_argument);
    PolyMatrix unit = make_matrix(Q, 2, {{Poly::constant(Q, 2, 1), Poly(Q, 2)},
                                         {Poly(Q, 2), Poly::variable(Q, 2, 1)}});
    CHECK_THROWS_AS(check(unit, 10), std::invalid_argument);
}

TEST_CASE("criteria agree on the regression set") {
    CHECK(criteria_agree(diag_xy(Q), 20));
    CHECK(criteria_agree(symm_xy(Q), 20));
    CHECK(criteria_agree(corner_x(Q), 12));

    Rng rng(35);
    CHECK(criteria_agree(build_generic_b(GenericSpec{2, 3, Field::prime_field(101)}, rng), 30));
    CHECK(criteria_agree(build_generic_b(GenericSpec{2, 2, Field::prime_field(7)}, rng), 30));
    CHECK(criteria_agree(build_generic_b(GenericSpec{3, 2, Field::prime_field(101)}, rng), 20));
}

TEST_CASE("T is contained in T^e at jet level") {
    Rng rng(37);
    std::vector<PolyMatrix> set = {diag_xy(Q), symm_xy(Q),
                                   build_generic_b(GenericSpec{2, 2, Field::prime_field(101)}, rng)};
    for (const auto& a : set) {
        GeneratorSet te = tangent_image_gens(a, true);
        GeneratorSet t = tangent_image_gens(a, false);
        GeneratorSet both = te;
        for (const auto& g : t.gens) both.gens.push_back(g);
        for (std::uint32_t d : {3u, 5u})
            CHECK(span_codim_at(both, d, 0) == span_codim_at(te, d, 0));
    }
}

TEST_CASE("scaling the matrix by a unit changes nothing") {
    Rng rng(39);
    for (const Field& f : {Q, Field::prime_field(101)}) {
        PolyMatrix a = symm_xy(f);
        DeterminacyReport base = check(a, 20);
        FieldElem t0 = rng.nonzero_element(f);
        DeterminacyReport scaled = check(a.scaled(t0), 20);
        CHECK(base.d.codim == scaled.d.codim);
        CHECK(base.d_e.codim == scaled.d_e.codim);
        CHECK(base.k_min == scaled.k_min);
        CHECK(base.d.is_finite() == scaled.d.is_finite());
    }
}
