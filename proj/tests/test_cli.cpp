#include <doctest.h>

#include <sstream>

#include "findet/cli.hpp"
#include "findet/json_io.hpp"
#include "test_helpers.hpp"

using namespace findet;
using findet::testing::diag_xy;
using findet::testing::symm_xy;

namespace {

const Field Q = Field::rationals();

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string diag_json(const std::string& field) {
    json m = matrix_to_json(diag_xy(field == "Q" ? Q : Field::prime_field(101)));
    return m.dump();
}

}  // namespace

TEST_CASE("JSON round-trips") {
    for (const Field& f : {Q, Field::prime_field(101)}) {
        Rng rng(53);
        PolyMatrix a(2, 2, f, 3);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) a.set(i, j, findet::testing::random_poly(f, 3, 3, 4, rng));
        json j = matrix_to_json(a);
        CHECK(matrix_from_json(j) == a);
        CHECK(field_from_json(field_to_json(f)) == f);

        GroupElement g = random_group_element(2, 2, 2, f, 3, 2);
        GroupElement back = group_element_from_json(group_element_to_json(g));
        CHECK(back.u == g.u);
        CHECK(back.v == g.v);
    }
    // rational coefficients travel as "n/d" strings
    Poly p(Q, 1);
    p.add_term(Monomial::power(1, 0, 2), FieldElem::from_fraction(Q, -2, 6));
    json pj = poly_to_json(p);
    CHECK(pj[0][0].get<std::string>() == "-1/3");
    CHECK(poly_from_json(pj, Q, 1) == p);
}

TEST_CASE("check subcommand on diag(x,y)") {
    CliRun r = run({"check", "--json", diag_json("Fp101"), "--format", "json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "finitely_determined");
    CHECK(j["d_e"]["status"] == "finite");
    CHECK(j["d_e"]["codim"] == 2);
    CHECK(j["bounds"]["ii"] == 5);
    CHECK(j["provenance"]["tool"] == "findet");
    CHECK(j["provenance"]["seed"] == 42);
}

TEST_CASE("check rejects the zero matrix with exit 1") {
    CliRun r = run({"check", "--json",
                    R"({"m":2,"n":2,"s":2,"field":"Q","entries":[[[],[]],[[],[]]]})"});
    CHECK(r.code == 1);
    CHECK(r.err.find("ord undefined for zero matrix") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
    CliRun bad_json = run({"check", "--json", "{oops"});
    CHECK(bad_json.code == 1);
    CHECK(bad_json.err.find("input error") != std::string::npos);

    CliRun bad_field = run({"check", "--json",
                            R"({"m":1,"n":1,"s":1,"field":{"Fp":6},"entries":[[[[1,[1]]]]]})"});
    CHECK(bad_field.code == 1);
    CHECK(bad_field.err.find("not prime") != std::string::npos);

    CliRun p_divides = run({"random-b", "--field", "Fp:5", "--N", "10", "--s", "2"});
    CHECK(p_divides.code == 1);

    CliRun no_input = run({"check"});
    CHECK(no_input.code == 1);
}

TEST_CASE("theta output feeds back as a matrix") {
    CliRun r = run({"theta", "--json", diag_json("Q")});
    REQUIRE(r.code == 0);
    PolyMatrix theta = matrix_from_json(json::parse(r.out));
    CHECK(theta.rows() == 4);
    CHECK(theta.cols() == 10);
}

TEST_CASE("minors subcommand enumerates C(10,4) labelled minors") {
    CliRun r = run({"minors", "--json", diag_json("Fp101")});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["size"] == 4);
    CHECK(j["minors"].size() == 210);
    CHECK(j["minors"][0]["cols"] == json::array({1, 2, 3, 4}));
}

TEST_CASE("random-b output feeds into check") {
    CliRun rb = run({"random-b", "--field", "Fp:101", "--s", "2", "--N", "3", "--seed", "11"});
    REQUIRE(rb.code == 0);
    CliRun chk = run({"check", "--json", rb.out});
    REQUIRE(chk.code == 0);
    json j = json::parse(chk.out);
    CHECK(j["verdict"] == "finitely_determined");
}

TEST_CASE("verify-paper is byte-deterministic for a fixed seed") {
    CliRun a = run({"verify-paper", "--seed", "42"});
    CliRun b = run({"verify-paper", "--seed", "42"});
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["all_pass"] == true);

    CliRun c = run({"verify-paper", "--seed", "43", "--format", "text"});
    CHECK(c.code == 0);
    CHECK(c.out.find("FAIL") == std::string::npos);
}

TEST_CASE("check output is byte-deterministic") {
    std::vector<std::string> args = {"check", "--json", diag_json("Q"), "--max-degree", "12"};
    CliRun a = run(args);
    CliRun b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("scan subcommand emits a ScanResult") {
    json a = matrix_to_json(diag_xy(Q));
    CliRun r = run({"scan", "--json", a.dump(), "--N", "2", "--t-count", "3", "--seed", "5",
                    "--max-degree", "20"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["t_values"].size() == 3);
    CHECK(j["d_e_values"].size() == 3);
    CHECK(j["d_e_at_zero"]["status"] == "finite");
    CHECK(j["satisfied_indices"].size() >= 1);
    CHECK(j.contains("b"));
}

TEST_CASE("inconclusive verdicts still exit 0") {
    json corner = matrix_to_json(findet::testing::corner_x(Q));
    CliRun r = run({"check", "--json", corner.dump(), "--max-degree", "8"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["verdict"] == "not_determined_up_to_cap");
    CHECK(j["d_e"]["status"] == "inconclusive");
}
