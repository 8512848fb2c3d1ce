#include <doctest.h>

#include <random>
#include <set>

#include "picard/gaussian.hpp"
#include "picard/group.hpp"
#include "picard/json_io.hpp"

using namespace picard;

namespace {

GaussianInt gi(long a, long b) { return GaussianInt(a, b); }

GaussianInt random_gi(std::mt19937_64& rng, long r) {
    std::uniform_int_distribution<long> d(-r, r);
    return gi(d(rng), d(rng));
}

}  // namespace

TEST_CASE("ring arithmetic") {
    CHECK(gi(1, 2) * gi(3, -1) == gi(5, 5));
    CHECK(gi(0, 1) * gi(0, 1) == gi(-1, 0));
    CHECK(gi(3, 4).norm() == 25);
    CHECK(gi(3, 4).conj() == gi(3, -4));
    int units = 0;
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b) units += gi(a, b).is_unit();
    CHECK(units == 4);
    CHECK(gi(2, -3).str() == "2-3i");
    CHECK(gi(0, -1).str() == "-i");
}

TEST_CASE("euclidean division and gcd") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 500; ++t) {
        GaussianInt a = random_gi(rng, 1000), b = random_gi(rng, 60);
        if (b.is_zero()) continue;
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(2 * r.norm() <= b.norm());
    }
    for (int t = 0; t < 300; ++t) {
        GaussianInt c = random_gi(rng, 20);
        GaussianInt a = c * random_gi(rng, 50), b = c * random_gi(rng, 50);
        if (a.is_zero() && b.is_zero()) continue;
        GaussianInt g = gcd(a, b);
        CHECK(exact_div(a, g).has_value());
        CHECK(exact_div(b, g).has_value());
        if (!c.is_zero()) CHECK(exact_div(g, c).has_value());
    }
    CHECK(exact_div(gi(2, 0), gi(1, 1)) == gi(1, -1));
    CHECK_FALSE(exact_div(gi(1, 0), gi(1, 1)).has_value());
}

TEST_CASE("gaussian rationals") {
    GaussianRat x(mpq_class(1, 2), mpq_class(-3, 4));
    CHECK(x * x.inverse() == GaussianRat(1));
    CHECK((x - x).is_zero());
    CHECK(GaussianRat(mpq_class(4, 2), mpq_class(0)).is_integral());
    CHECK(GaussianRat(mpq_class(4, 2), mpq_class(0)).to_int() == gi(2, 0));
    CHECK_THROWS(x.to_int());
}

TEST_CASE("q_form") {
    GVec3 e1{1, 0, 0}, e3{0, 0, 1};
    CHECK(q_form(e1, e3) == gi(0, 1));
    CHECK(q_form(e1, e3).norm() == 1);
    CHECK(q_form({gi(0, 1), gi(1, 1), gi(1, 1)}, {gi(0, 1), gi(1, 1), gi(1, 1)}).is_zero());

    std::vector<GVec3> j8 = {{1, 0, 0},           {0, 0, 1},           {-1, gi(1, 1), gi(1, 1)},
                             {gi(-1, 1), gi(1, 1), 1}, {gi(1, 1), gi(1, -1), 1}, {gi(0, 1), gi(1, 1), gi(1, 1)},
                             {gi(0, 2), 2, 1},    {gi(0, 1), 2, 2}};
    for (std::size_t a = 0; a < j8.size(); ++a)
        for (std::size_t b = 0; b < j8.size(); ++b) {
            if (a == b) continue;
            mpz_class n = q_form(j8[a], j8[b]).norm();
            CHECK((n == 1 || n == 2 || n == 4));
        }

    std::mt19937_64 rng(11);
    for (int t = 0; t < 200; ++t) {
        GVec3 v{random_gi(rng, 9), random_gi(rng, 9), random_gi(rng, 9)};
        CHECK(q_form(v, v).im() == 0);
    }
}

TEST_CASE("form invariance under group words") {
    std::mt19937_64 rng(3);
    const Gen gens[] = {Gen::Eps, Gen::W, Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Xi};
    for (int t = 0; t < 50; ++t) {
        std::vector<Letter> ls;
        for (int k = 0; k < 6; ++k) ls.push_back({gens[rng() % 6], int(rng() % 5) - 2});
        GMat3 g = eval_word(Word(ls));
        GVec3 u{random_gi(rng, 5), random_gi(rng, 5), random_gi(rng, 5)};
        GVec3 v{random_gi(rng, 5), random_gi(rng, 5), random_gi(rng, 5)};
        CHECK(q_form(g * u, g * v) == q_form(u, v));
    }
}

TEST_CASE("is_isotropic") {
    CHECK(is_isotropic({1, 0, 0}));
    CHECK(is_isotropic({gi(0, 1), 2, 2}));
    CHECK_FALSE(is_isotropic({1, 1, 1}));
}

TEST_CASE("is_reduced") {
    CHECK(is_reduced({1, 0, 2}));
    CHECK_FALSE(is_reduced({gi(1, 1), gi(1, 1), gi(1, 1)}));
    CHECK(is_reduced({gi(0, 2), 2, 1}));
    CHECK_THROWS_AS(is_reduced({0, 0, 0}), std::invalid_argument);
}

TEST_CASE("unit_normalize") {
    CHECK(unit_normalize({-1, 0, -1}) == GVec3{1, 0, 1});
    CHECK(unit_normalize({gi(0, 1), 0, 0}) == GVec3{1, 0, 0});
    CHECK(unit_normalize({gi(1, 1), gi(1, 1), 1}) == GVec3{gi(1, 1), gi(1, 1), 1});
    CHECK_THROWS_AS(unit_normalize({0, 0, 0}), std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int t = 0; t < 200; ++t) {
        GVec3 v{random_gi(rng, 4), random_gi(rng, 4), random_gi(rng, 4)};
        if (is_zero(v)) continue;
        GVec3 n = unit_normalize(v);
        CHECK(unit_normalize(n) == n);
        std::set<GVec3> orbit;
        for (int k = 0; k < 4; ++k) {
            CHECK(unit_normalize(scale(unit_power(k), v)) == n);
            orbit.insert(scale(unit_power(k), v));
        }
        CHECK(orbit.size() == 4);
    }
}

TEST_CASE("json round trip") {
    GVec3 v{gi(0, 2), -2, gi(1, -7)};
    CHECK(to_json(v).dump() == "[[0,2],[-2,0],[1,-7]]");
    CHECK(vector_from_json(to_json(v)) == v);
    GMat3 m = generator_matrix(Gen::Xi);
    CHECK(matrix_from_json(to_json(m)) == m);
    GaussianInt big(mpz_class("123456789012345678901234567890"), mpz_class(1));
    CHECK(gaussian_from_json(to_json(big)) == big);
    CHECK_THROWS(vector_from_json(json::parse("[1,2]")));
}
