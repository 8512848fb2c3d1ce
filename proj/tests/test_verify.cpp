#include <doctest.h>

#include "picard/verify.hpp"

using namespace picard;

TEST_CASE("reference tables") {
    const auto& t = reference_symn_table();
    REQUIRE(t.size() == 20);
    CHECK(t[4] == std::array<std::size_t, 4>{0, 0, 3, 0});
    CHECK(t[11] == std::array<std::size_t, 4>{0, 1, 3, 1});
    CHECK(t[18] == std::array<std::size_t, 4>{0, 8, 7, 0});
    CHECK(t[19] == std::array<std::size_t, 4>{0, 11, 5, 1});
    CHECK(reference_incidence(ConfigTag::J33, ConfigTag::J22) == 8);
    CHECK(reference_incidence(ConfigTag::J21, ConfigTag::J31) == 3);
    CHECK(reference_incidence(ConfigTag::J21, ConfigTag::J22) < 0);
}

TEST_CASE("fast suites pass") {
    for (const char* s : {"stabilizers", "qmatrix", "flags", "classification", "incidence", "strong-admissibility"}) {
        CAPTURE(s);
        Report r = verify_suite(s);
        CHECK(r.pass());
        CHECK_FALSE(r.checks.empty());
    }
}

TEST_CASE("incidence reports the table conflict") {
    Report r = verify_suite("incidence");
    REQUIRE(r.results["discrepancies"].size() == 1);
    CHECK(r.results["discrepancies"][0] == "J3_3 / J2_1: table 12, described 16, computed 16");
}

TEST_CASE("bounds are deterministic in the seed") {
    VerifyOptions o;
    o.samples = 40;
    o.seed = 11;
    auto a = verify_suite("bounds", o).to_json()["rows"];
    auto b = verify_suite("bounds", o).to_json()["rows"];
    CHECK(a == b);
    o.seed = 12;
    CHECK(verify_suite("bounds", o).to_json()["rows"] != a);
}

TEST_CASE("properties on a short range") {
    VerifyOptions o;
    o.symn_max = 6;
    o.random_reps = 5;
    o.samples = 20;
    Report r = verify_suite("properties", o);
    CHECK(r.pass());
    CHECK(r.rows.size() == 5 + 6);
}

TEST_CASE("unknown suite") { CHECK_THROWS_AS(verify_suite("nope"), std::invalid_argument); }
