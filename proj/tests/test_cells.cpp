#include <doctest.h>

#include "picard/cells.hpp"
#include "picard/complex.hpp"

using namespace picard;

namespace {

// d_p with rho trivial: entry (row, col) = sum of signs.
std::vector<std::vector<int>> trivial_matrix(const std::vector<DifferentialTerm>& terms, std::size_t rows, std::size_t cols) {
    std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
    for (const auto& t : terms) m[t.row][t.col] += t.sign;
    return m;
}

}  // namespace

TEST_CASE("shipped dataset") {
    const CellDataset& d = shipped_cells();
    CHECK(d.cells(0).size() == 6);
    CHECK(d.cells(1).size() == 9);
    CHECK(d.cells(2).size() == 7);
    CHECK(d.cells(3).size() == 2);
    std::string names;
    for (int p = 0; p < 4; ++p)
        for (const auto& c : d.cells(p)) names += c.name;
    CHECK(names == "mnopqrabcdefghiABCDEFGXY");
    CHECK(d.index("D") == 3);
    CHECK(d.cell("p").order == 32);
    CHECK_THROWS_AS(d.cell("Z"), std::out_of_range);
    CHECK(stabilizer_mismatches().empty());
}

TEST_CASE("stated orders") {
    const std::vector<std::vector<std::size_t>> orders{{12, 8, 2, 32, 6, 8}, {1, 2, 2, 1, 2, 2, 4, 4, 1}, {1, 1, 1, 2, 1, 1, 1}, {1, 1}};
    for (int p = 0; p < 4; ++p) {
        const auto& cs = shipped_cells().cells(p);
        for (std::size_t k = 0; k < cs.size(); ++k) CHECK(cs[k].order == orders[p][k]);
    }
}

TEST_CASE("json round trip") {
    json j = shipped_cells().to_json();
    CellDataset again = CellDataset::from_json(j);
    CHECK(again.to_json() == j);
    CHECK(json::parse(shipped_cells_text()) == j);
}

TEST_CASE("boundary records agree with the displayed differentials") {
    for (int p = 0; p < 3; ++p) {
        CAPTURE(p);
        CHECK(same_terms(differential_terms(shipped_cells(), p), display_terms(p)));
    }
    auto bad = display_terms(1);
    bad[3].sign = -bad[3].sign;
    CHECK_FALSE(same_terms(differential_terms(shipped_cells(), 1), bad));
    auto moved = display_terms(2);
    moved[1].word = Word::parse("t e w t e w");
    CHECK_FALSE(same_terms(differential_terms(shipped_cells(), 2), moved));
}

TEST_CASE("trivial-coefficient D0 matches the flag tables") {
    auto m = trivial_matrix(differential_terms(shipped_cells(), 0), 9, 6);
    const std::vector<std::vector<int>> want{
        {-1, 0, 1, 0, 0, 0},  // a = -m + o
        {0, 0, 1, 0, -1, 0},  // b
        {0, 0, 1, 0, -1, 0},  // c
        {0, 0, 0, 0, 0, 0},   // d
        {0, 0, 1, -1, 0, 0},  // e
        {0, -1, 0, 1, 0, 0},  // f
        {1, -1, 0, 0, 0, 0},  // g = m - n
        {0, 0, 0, 1, 0, -1},  // h
        {0, 0, 1, 0, 0, -1},  // i
    };
    CHECK(m == want);
}

TEST_CASE("malformed datasets") {
    json good = shipped_cells().to_json();
    auto expect_bad = [](const json& j) { CHECK_THROWS_AS(CellDataset::from_json(j), std::invalid_argument); };
    json j = good;
    j["schema"] = "other";
    expect_bad(j);
    j = good;
    j["version"] = 2;
    expect_bad(j);
    j = good;
    j["cells"][6]["boundary"][0]["face"] = "zz";
    expect_bad(j);
    j = good;
    j["cells"][6]["boundary"][0]["face"] = "a";
    expect_bad(j);
    j = good;
    j["cells"][6]["boundary"][0]["sign"] = 2;
    expect_bad(j);
    j = good;
    j["cells"][6]["boundary"][1]["word"] = "q^2";
    expect_bad(j);
    j = good;
    j["cells"][1]["name"] = "m";
    expect_bad(j);
    j = good;
    j["cells"][0]["boundary"] = json::array({{{"face", "n"}, {"sign", 1}, {"word", "1"}}});
    expect_bad(j);
}
