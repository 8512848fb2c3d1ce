#include <doctest.h>

#include "picard/report.hpp"

using namespace picard;
using nlohmann::json;

namespace {

Report sample() {
    Report r;
    r.command = "cohomology trivial";
    r.inputs = {{"ring", "Z"}};
    r.columns = {"degree", "group"};
    r.add_row({0, "Z"});
    r.add_row({1, "0"});
    r.results["method"] = "exact";
    r.check("first", true);
    return r;
}

}  // namespace

TEST_CASE("json and table agree") {
    Report r = sample();
    json j = r.to_json();
    CHECK(j["rows"].size() == 2);
    CHECK(j["rows"][0]["group"] == "Z");
    CHECK(j["rows"][1]["degree"] == 1);
    CHECK(j["pass"] == true);
    std::string t = r.to_table();
    for (const auto& row : j["rows"])
        for (const auto& [k, v] : row.items()) CHECK(t.find(cell_text(v)) != std::string::npos);
    CHECK(t.find("PASS first") != std::string::npos);
}

TEST_CASE("failing check") {
    Report r = sample();
    r.check("second", false, "witness (1, 0, 0)");
    CHECK_FALSE(r.pass());
    CHECK(r.to_json()["checks"][1]["detail"] == "witness (1, 0, 0)");
    CHECK(r.to_table().find("FAIL second  witness (1, 0, 0)") != std::string::npos);
}

TEST_CASE("csv") {
    Report r = sample();
    r.add_row({2, "Z^2 + Z/2"});
    r.add_row({3, "a,b"});
    CHECK(r.to_csv() == "degree,group\n0,Z\n1,0\n2,Z^2 + Z/2\n3,\"a,b\"\n");
    CHECK_THROWS_AS(r.add_row({1}), std::logic_error);
}
