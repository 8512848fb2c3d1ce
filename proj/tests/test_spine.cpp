#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "picard/spine.hpp"

using namespace picard;

namespace {

GaussianInt gi(long a, long b = 0) { return GaussianInt(a, b); }

bool close(const Point& a, const Point& b, double tol) {
    return std::abs(a.y - b.y) < tol && std::abs(a.beta - b.beta) < tol && std::abs(a.r - b.r) < tol;
}

Word random_word(std::mt19937_64& rng, int len) {
    const Gen gens[] = {Gen::Eps, Gen::W, Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Xi};
    std::vector<Letter> ls;
    for (int k = 0; k < len; ++k) ls.push_back({gens[rng() % 6], int(rng() % 5) - 2});
    return Word(ls);
}

}  // namespace

TEST_CASE("f_exhaustion") {
    GVec3 v{gi(2, 1), gi(1, 1), 1};
    Point o{1, 0, 0};
    double n2 = 5 + 2 + 1;
    CHECK(f_exhaustion(v, o) == doctest::Approx(1 / std::sqrt(n2)).epsilon(1e-14));
    Point z{0.37, cplx(0.2, -1.3), 0.8};
    CHECK(f_exhaustion({1, 0, 0}, z) == doctest::Approx(0.37).epsilon(1e-15));
    CHECK(std::abs(f_exhaustion({0, 0, 1}, Point{1 / std::sqrt(2.0), cplx(0, 1), 0}) - 1 / std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("generator actions") {
    CHECK(close(generator_action(Gen::Tau, {1, 0, 0}), {1, 0, 1}, 1e-15));
    CHECK(close(generator_action(Gen::Eps, {1, cplx(0, 1), 0.3}), {1, 1, 0.3}, 1e-15));
    CHECK(close(generator_action(Gen::Sigma, {1, 0, 0}), {1, cplx(1, 1), 0}, 1e-15));

    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int t = 0; t < 100; ++t) {
        Point z{0.3 + std::abs(u(rng)), cplx(u(rng), u(rng)), u(rng)};
        for (Gen g : {Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Eps})
            for (long k : {-2L, 1L, 3L})
                CHECK(close(generator_action(g, z, k), act(power(generator_matrix(g), k), z), 1e-9));
    }
}

TEST_CASE("equivariance") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1, 1);
    const GVec3 vs[] = {{1, 0, 0}, {0, 0, 1}, {gi(0, 1), 2, 2}, {gi(1, 1), gi(1, 1), 1}};
    for (int t = 0; t < 100; ++t) {
        GMat3 g = eval_word(random_word(rng, 3));
        Point z{0.5 + std::abs(u(rng)), cplx(u(rng), u(rng)), u(rng)};
        Point gz = act(g, z);
        for (const auto& v : vs) {
            double a = f_exhaustion(g * v, gz), b = f_exhaustion(v, z);
            CHECK(std::abs(a - b) < 1e-9 * std::max(1.0, b));
        }
    }
}

TEST_CASE("reduce_point") {
    auto r0 = reduce_point({1, 0, 0});
    CHECK(r0.word.empty());
    CHECK(close(r0.z, {1, 0, 0}, 1e-15));
    auto r1 = reduce_point({1, 0, 7.3});
    CHECK(r1.word == Word(Gen::Tau, -7));
    CHECK(close(r1.z, {1, 0, 0.3}, 1e-12));

    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int t = 0; t < 200; ++t) {
        Point z{0.2 + std::abs(u(rng)), t < 20 ? cplx(2, 2) : cplx(u(rng), u(rng)), u(rng)};
        auto red = reduce_point(z);
        CHECK(red.z.y == z.y);
        CHECK(in_reduced_square(red.z.beta, 1e-12));
        CHECK(red.z.r > -0.5);
        CHECK(red.z.r <= 0.5);
        CHECK(close(act(eval_word(red.word), z), red.z, 1e-9));
        auto again = reduce_point(red.z);
        CHECK(close(again.z, red.z, 1e-9));
        GVec3 v{gi(0, 1), 2, 2};
        CHECK(std::abs(f_exhaustion(eval_word(red.word) * v, red.z) - f_exhaustion(v, z)) < 1e-9);
    }
}

TEST_CASE("e_surface_y2") {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-0.7, 0.7);
    for (int t = 0; t < 100; ++t) {
        cplx b(u(rng), u(rng));
        double r = u(rng);
        auto y2 = e_surface_y2({0, 0, 1}, b, r);
        double expect = -std::norm(b) / 2 + std::sqrt(1 - r * r);
        if (expect > 0) {
            REQUIRE(y2);
            CHECK(*y2 == doctest::Approx(expect).epsilon(1e-12));
            Point z{std::sqrt(*y2), b, r};
            CHECK(std::abs(f_exhaustion({0, 0, 1}, z) - z.y) < 1e-9);
        }
        cplx b2 = b + cplx(0, 1);
        auto y22 = e_surface_y2({gi(0, 1), 2, 2}, b2, r / 4);
        double rad = 1 - 4 * std::pow(b2.real() + r / 4, 2);
        double e2 = -std::norm(b2 - cplx(0, 1)) / 2 + 0.5 * std::sqrt(std::max(rad, 0.0));
        if (rad >= 0 && e2 > 0) {
            REQUIRE(y22);
            CHECK(*y22 == doctest::Approx(e2).epsilon(1e-12));
        }
    }
    auto ov = e_surface_y2({1, 0, 2}, 0, 0.5);
    REQUIRE(ov);
    CHECK(*ov == doctest::Approx(0.5).epsilon(1e-14));
    CHECK_FALSE(e_surface_y2({0, 0, 1}, 0, 1.5));
}

TEST_CASE("first contact pairs") {
    auto a = first_contact_pair({1, 0, 0}, {0, 0, 1});
    REQUIRE(a.point);
    CHECK(close(*a.point, {1, 0, 0}, 1e-15));
    CHECK(a.value == doctest::Approx(1));

    GVec3 v{gi(0, 1), gi(1, 1), gi(1, 1)};
    auto b = first_contact_pair({1, 0, 0}, v);
    REQUIRE(b.point);
    CHECK(close(*b.point, {std::pow(2.0, -0.25), cplx(0, 1), 0.5}, 1e-12));
    CHECK(b.value == doctest::Approx(std::pow(2.0, -0.25)));
    CHECK(std::abs(f_exhaustion(v, *b.point) - b.point->y) < 1e-9);
    auto y2 = e_surface_y2(v, b.point->beta, b.point->r);
    REQUIRE(y2);
    CHECK(std::abs(*y2 - b.point->y * b.point->y) < 1e-9);

    auto c = first_contact_pair({1, 0, 0}, {gi(0, 1), 2, 2});
    CHECK(c.value == doctest::Approx(1 / std::sqrt(2.0)));
    CHECK(close(*c.point, {1 / std::sqrt(2.0), cplx(0, 1), 0}, 1e-12));

    auto d = first_contact_pair({0, 0, 1}, {gi(0, 1), 2, 2});
    CHECK_FALSE(d.point);
    CHECK_THROWS_AS(first_contact_pair({1, 0, 0}, {gi(0, 1), 0, 0}), std::invalid_argument);
}

TEST_CASE("max_parabolic") {
    auto s = max_parabolic({1, 0, 0}, 1);
    REQUIRE(s.witnesses.size() == 2);
    CHECK(Configuration({s.witnesses[0].v, s.witnesses[1].v}).same_set(representative(ConfigTag::J21)));
    CHECK(s.witnesses[0].tie);

    auto s8 = max_parabolic({1 / std::sqrt(2.0), cplx(0, 1), 0}, 1 / std::sqrt(2.0));
    std::vector<GVec3> vs;
    for (const auto& w : s8.witnesses) vs.push_back(w.v);
    REQUIRE(vs.size() == 8);
    CHECK(Configuration(vs).same_set(representative(ConfigTag::J8)));

    CHECK(max_parabolic({1, 0, 0}, 1.01).witnesses.empty());
}

TEST_CASE("max_parabolic is exhaustive against a brute-force box") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int t = 0; t < 5; ++t) {
        Point z{0.8 + 0.2 * std::abs(u(rng)), cplx(u(rng), 0.5 + u(rng)), u(rng)};
        const double floor = 0.45;
        auto s = max_parabolic(z, floor);
        std::set<GVec3> got;
        for (const auto& w : s.witnesses) got.insert(w.v);
        std::set<GVec3> brute;
        const long B = 4;
        for (long a = -B; a <= B; ++a)
            for (long b = -B; b <= B; ++b)
                for (long c = -B; c <= B; ++c)
                    for (long d = -B; d <= B; ++d)
                        for (long e = -B; e <= B; ++e)
                            for (long f = -B; f <= B; ++f) {
                                GVec3 v{gi(a, b), gi(c, d), gi(e, f)};
                                if (is_zero(v) || !is_isotropic(v)) continue;
                                if (f_exhaustion(v, z) < floor - kTieTolerance || !is_reduced(v)) continue;
                                brute.insert(unit_normalize(v));
                            }
        CHECK(got == brute);
    }
}

TEST_CASE("first-contact constants") {
    for (ConfigTag t : admissible_tags()) {
        CAPTURE(tag_name(t));
        Point z = first_contact_point(t);
        for (const auto& v : representative(t).vectors())
            CHECK(std::abs(f_exhaustion(v, z) - z.y) < 1e-12);
        auto ref = refine_first_contact(t);
        CHECK(ref.residual < 1e-8);
        CHECK(close(ref.z, z, 1e-7));
    }
}

TEST_CASE("strong admissibility") {
    for (ConfigTag t : admissible_tags()) {
        CAPTURE(tag_name(t));
        auto c = verify_strong_admissibility(t);
        CHECK(c.pass);
        CHECK(c.runner_up < c.value - 1e-6);
    }
}

TEST_CASE("spine samples") {
    for (ConfigTag cell : {ConfigTag::J21, ConfigTag::J22}) {
        auto s = sample_spine_cell(cell, 50, 99);
        CHECK(s.samples.size() == 50);
        for (const auto& x : s.samples) {
            CHECK(x.value > std::pow(5.0, -0.25));
            CHECK(x.value <= 1 + 1e-12);
            CHECK(x.value >= 1 / std::sqrt(2.0) - 1e-9);
        }
    }
}

TEST_CASE("spine value") {
    auto sv = spine_value(first_contact_point(ConfigTag::J8));
    CHECK(sv.value == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-9));
    CHECK(sv.dominating.size() == 8);
    auto hi = spine_value(Point{3, {0.2, 0.1}, 0.3});
    CHECK(hi.value == doctest::Approx(3));
    REQUIRE(hi.dominating.size() == 1);
    CHECK(hi.dominating[0].v == GVec3{1, 0, 0});
}
