#include <doctest.h>

#include <random>

#include "picard/complex.hpp"

using namespace picard;

namespace {

std::vector<std::string> strings(const CohomologyResult& r) {
    std::vector<std::string> out;
    for (const auto& g : r.h) out.push_back(g.str(r.mode));
    return out;
}

}  // namespace

TEST_CASE("trivial coefficients over Z") {
    auto r = cohomology(trivial_rep(Mode::IntegerLattice));
    CHECK(strings(r) == std::vector<std::string>{"Z", "0", "Z", "0"});
    CHECK(r.dd_zero);
    CHECK(r.cochain_dims == std::array<std::size_t, 4>{6, 9, 7, 2});
    for (const auto& g : r.h) CHECK(g.torsion.empty());

    AssembledComplex a = assemble(trivial_rep(Mode::IntegerLattice));
    const QiMatrix& d0 = a.differentials[0];
    const int want[9][6] = {{-1, 0, 1, 0, 0, 0}, {0, 0, 1, 0, -1, 0}, {0, 0, 1, 0, -1, 0},
                            {0, 0, 0, 0, 0, 0},  {0, 0, 1, -1, 0, 0}, {0, -1, 0, 1, 0, 0},
                            {1, -1, 0, 0, 0, 0}, {0, 0, 0, 1, 0, -1}, {0, 0, 1, 0, 0, -1}};
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 6; ++j) CHECK(d0(i, j) == GaussianRat(want[i][j]));
}

TEST_CASE("standard lattice over Z") {
    auto rep = standard_rep(Mode::IntegerLattice);
    auto r = cohomology(rep);
    CHECK(strings(r) == std::vector<std::string>{"0", "0", "Z^2", "Z/2"});
    CHECK(r.h[3].torsion == std::vector<mpz_class>{2});
    CHECK(r.h[1].torsion.empty());
    CHECK(r.h[2].torsion.empty());
    AssembledComplex a = assemble(rep);
    for (int p = 0; p < 4; ++p)
        for (const auto& b : a.bases[p])
            if (b.size()) CHECK(is_saturated(to_integer(b.columns)));
}

TEST_CASE("field coefficients") {
    CHECK(cohomology(trivial_rep()).dims() == std::array<std::size_t, 4>{1, 0, 1, 0});
    CHECK(cohomology(standard_rep(Mode::GaussianField)).dims() == std::array<std::size_t, 4>{0, 0, 1, 0});
    auto r13 = cohomology(symn_rep(13));
    CHECK(r13.method == RankMethod::Modular);
    CHECK(r13.dims() == std::array<std::size_t, 4>{0, 0, 7, 0});
    CHECK(r13.euler_cochains() == r13.euler_cohomology());
    CHECK(cohomology(symn_rep(9)).dims() == std::array<std::size_t, 4>{0, 0, 5, 0});
}

TEST_CASE("exact and modular ranks agree on small Sym^n") {
    CohomologyOptions modular;
    modular.force_modular = true;
    modular.primes = 4;
    for (int n = 0; n <= 4; ++n) {
        CAPTURE(n);
        auto e = cohomology(symn_rep(n));
        auto m = cohomology(symn_rep(n), modular);
        CHECK(e.method == RankMethod::Exact);
        CHECK(m.method == RankMethod::Modular);
        CHECK(e.cochain_dims == m.cochain_dims);
        CHECK(e.ranks == m.ranks);
    }
}

TEST_CASE("h0 identity") {
    for (const auto& rep : {trivial_rep(), trivial_rep(Mode::IntegerLattice), standard_rep(Mode::GaussianField),
                            standard_rep(Mode::IntegerLattice), dual_rep(), symn_rep(2), symn_rep(6)}) {
        CAPTURE(rep.name());
        auto c = h0_identity_check(rep);
        CHECK(c.equal);
    }
    auto t = h0_identity_check(trivial_rep());
    CHECK(t.kernel_dim == 1);
    CHECK(t.method == RankMethod::Exact);
    CHECK(h0_identity_check(symn_rep(6)).method == RankMethod::Modular);
    CHECK(h0_identity_check(standard_rep(Mode::GaussianField)).fixed_dim == 0);
}

TEST_CASE("h3 bounds") {
    auto t = h3_bounds(trivial_rep(), cohomology(trivial_rep()).h[3].rank);
    CHECK(t.actual == 0);
    CHECK(t.holds);
    auto s4 = symn_rep(4);
    auto b4 = h3_bounds(s4, cohomology(s4).h[3].rank);
    CHECK(b4.actual == 1);
    CHECK(b4.holds);
    REQUIRE(b4.eigen_bound);
    auto z = h3_bounds(standard_rep(Mode::IntegerLattice), 0);
    CHECK_FALSE(z.eigen_bound);
    CHECK(z.holds);
}

TEST_CASE("D D = 0") {
    auto g = group_ring_dd_check();
    CHECK(g.ok);
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 50; ++t) {
        Representation rep = random_small_rep(rng);
        CAPTURE(rep.name());
        AssembledComplex a = assemble(rep);
        CHECK(dd_zero(a));
        // stabilizers preserve their fixed submodules
        for (int p = 0; p < 4; ++p)
            for (std::size_t c = 0; c < a.bases[p].size(); ++c)
                for (const auto& w : shipped_cells().cells(p)[c].stabilizer) {
                    const GiMatrix& b = a.bases[p][c].columns;
                    CHECK((rep.image(w) * b - b).is_zero());
                }
    }
    // ambient composite on arbitrary vectors of the fixed submodules
    auto s3 = symn_rep(3);
    AssembledComplex a = assemble(s3);
    for (int p = 0; p < 2; ++p) {
        const std::size_t dim = s3.dim();
        std::vector<GiMatrix> blocks;
        GiMatrix x(shipped_cells().cells(p).size() * dim, a.dims[p]);
        std::size_t off = 0;
        for (std::size_t c = 0; c < a.bases[p].size(); ++c) {
            const GiMatrix& b = a.bases[p][c].columns;
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < b.cols(); ++j) x(c * dim + i, off + j) = b(i, j);
            off += b.cols();
        }
        GiMatrix y = apply_ambient(s3, shipped_cells(), p, x);
        CHECK(apply_ambient(s3, shipped_cells(), p + 1, y).is_zero());
        const ModPrime& pr = mod_primes()[2];
        ModMatrix ym = apply_ambient_mod(s3, shipped_cells(), p, reduce_mod(x, pr), pr);
        CHECK(ym == reduce_mod(y, pr));
    }
}

TEST_CASE("a flipped sign breaks D D = 0") {
    json j = shipped_cells().to_json();
    j["cells"][15]["boundary"][0]["sign"] = 1;  // A: a with sign +1
    CellDataset broken = CellDataset::from_json(j);
    CHECK_FALSE(group_ring_dd_check(broken).ok);
    CHECK_THROWS_AS(cohomology(trivial_rep(), {}, broken), std::logic_error);
}

TEST_CASE("symn table ordering with workers") {
    auto rows = symn_table(1, 5, {}, 3);
    REQUIRE(rows.size() == 5);
    const std::size_t h2[] = {1, 0, 0, 1, 3};
    for (int k = 0; k < 5; ++k) {
        CHECK(rows[k].rep == "symn:" + std::to_string(k + 1));
        CHECK(rows[k].h[2].rank == h2[k]);
        CHECK(rows[k].h[0].rank == 0);
    }
}

TEST_CASE("D D = 0 mod p") {
    for (int n : {1, 6, 11}) CHECK(dd_zero_mod(symn_rep(n), mod_primes()[0]));
    json j = shipped_cells().to_json();
    j["cells"][15]["boundary"][0]["sign"] = 1;
    CellDataset broken = CellDataset::from_json(j);
    CHECK_FALSE(dd_zero_mod(symn_rep(2), mod_primes()[1], broken));
}
