#include <doctest.h>

#include <random>

#include "picard/linalg.hpp"

using namespace picard;

namespace {

GiMatrix random_gi(std::mt19937_64& rng, std::size_t m, std::size_t n, long range = 3) {
    std::uniform_int_distribution<long> u(-range, range);
    GiMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = GaussianInt(u(rng), u(rng));
    return a;
}

ZMatrix random_z(std::mt19937_64& rng, std::size_t m, std::size_t n, long range = 4) {
    std::uniform_int_distribution<long> u(-range, range);
    ZMatrix a(m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = u(rng);
    return a;
}

ZMatrix zmat(std::initializer_list<std::initializer_list<long>> rows) {
    ZMatrix a(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (long x : r) a(i, j++) = x;
        ++i;
    }
    return a;
}

}  // namespace

TEST_CASE("exact rank and kernel over Q(i)") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 2 + rng() % 6, n = 2 + rng() % 6, r = rng() % (std::min(m, n) + 1);
        GiMatrix a = r == 0 ? GiMatrix(m, n) : random_gi(rng, m, r) * random_gi(rng, r, n);
        const std::size_t rk = rank_exact(a);
        CHECK(rk <= r);
        GiMatrix k = kernel_exact(a);
        CHECK(k.cols() == n - rk);
        CHECK((a * k).is_zero());
        CHECK(rank_exact(k) == k.cols());
        for (const auto& pr : mod_primes()) CHECK(rank_mod(reduce_mod(a, pr), pr) == rk);
        ModMatrix km = kernel_mod(reduce_mod(a, mod_primes()[0]), mod_primes()[0]);
        CHECK(km.cols() == n - rk);
        CHECK(mul_mod(reduce_mod(a, mod_primes()[0]), km, mod_primes()[0]).is_zero());
    }
    GiMatrix id = GiMatrix::identity(4);
    CHECK(rank_exact(id) == 4);
    CHECK(kernel_exact(id).cols() == 0);
}

TEST_CASE("solve_exact") {
    std::mt19937_64 rng(4);
    GiMatrix b = random_gi(rng, 6, 3);
    REQUIRE(rank_exact(b) == 3);
    GiMatrix x = random_gi(rng, 3, 2);
    auto sol = solve_exact(b, b * x);
    REQUIRE(sol);
    CHECK(*sol == to_rational(x));
    GiMatrix off = b * x;
    off(0, 0) += GaussianInt(1);
    CHECK_FALSE(solve_exact(b, off));
}

TEST_CASE("integer kernel is saturated") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const std::size_t m = 1 + rng() % 5, n = 2 + rng() % 6;
        ZMatrix a = random_z(rng, m, n);
        for (std::size_t j = 0; j < n; ++j) a(0, j) *= 6;
        ZMatrix k = integer_kernel(a);
        CHECK((a * k).is_zero());
        CHECK(k.cols() == n - smith_invariants(a).size());
        if (k.cols()) CHECK(is_saturated(k));
    }
    ZMatrix a = zmat({{2, 4}});
    ZMatrix k = integer_kernel(a);
    REQUIRE(k.cols() == 1);
    CHECK(abs(k(0, 0)) == 2);
    CHECK(abs(k(1, 0)) == 1);
}

TEST_CASE("smith invariants") {
    auto d = smith_invariants(zmat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    CHECK(d == std::vector<mpz_class>{2, 6, 12});
    CHECK(smith_invariants(zmat({{0, 0}, {0, 0}})).empty());
    CHECK(smith_invariants(zmat({{2, 0}, {0, 3}})) == std::vector<mpz_class>{1, 6});
    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        ZMatrix a = random_z(rng, 4, 4, 6);
        auto s = smith_invariants(a);
        for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k] % s[k - 1] == 0);
    }
}

TEST_CASE("solve_integral") {
    ZMatrix b = zmat({{1, 0}, {0, 2}, {1, 1}});
    auto ok = solve_integral(b, zmat({{3}, {4}, {5}}));
    REQUIRE(ok);
    CHECK(*ok == zmat({{3}, {2}}));
    CHECK_FALSE(solve_integral(b, zmat({{0}, {1}, {0}})));
    CHECK_FALSE(solve_integral(b, zmat({{1}, {1}, {1}})));
    CHECK(is_saturated(zmat({{1, 0}, {0, 1}, {1, 1}})));
    CHECK_FALSE(is_saturated(zmat({{1, 0}, {0, 2}, {1, 0}})));
}

TEST_CASE("realification is multiplicative") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        GiMatrix a = random_gi(rng, 3, 3), b = random_gi(rng, 3, 3);
        CHECK(realify(a * b) == realify(a) * realify(b));
    }
    GiMatrix z(1, 1);
    z(0, 0) = GaussianInt(2, 3);
    CHECK(realify(z) == zmat({{2, -3}, {3, 2}}));
}

TEST_CASE("modular primes") {
    for (const auto& pr : mod_primes()) {
        CHECK(pr.p % 4 == 1);
        CHECK((std::uint64_t(pr.sqrt_m1) * pr.sqrt_m1 + 1) % pr.p == 0);
    }
    const ModPrime& pr = mod_primes()[1];
    CHECK(reduce_mod(GaussianInt(0, 1), pr) == pr.sqrt_m1);
    CHECK(reduce_mod(GaussianInt(-1), pr) == pr.p - 1);
    std::uint64_t i2 = std::uint64_t(reduce_mod(GaussianInt(0, 1), pr)) * pr.sqrt_m1 % pr.p;
    CHECK(i2 == pr.p - 1);
}
