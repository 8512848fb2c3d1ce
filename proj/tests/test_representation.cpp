#include <doctest.h>

#include <random>

#include "picard/representation.hpp"

using namespace picard;

namespace {

std::vector<Word> words(std::initializer_list<const char*> ws) {
    std::vector<Word> out;
    for (const char* w : ws) out.push_back(Word::parse(w));
    return out;
}

Word random_word(std::mt19937_64& rng, int len) {
    const Gen gens[] = {Gen::Eps, Gen::W, Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Xi};
    std::vector<Letter> ls;
    for (int k = 0; k < len; ++k) ls.push_back({gens[rng() % 6], int(rng() % 5) - 2});
    return Word(ls);
}

mpz_class det(const ZMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 1) return a(0, 0);
    mpz_class s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a(0, j) == 0) continue;
        ZMatrix m(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t k = 0, c = 0; k < n; ++k)
                if (k != j) m(i - 1, c++) = a(i, k);
        s += (j % 2 ? -1 : 1) * a(0, j) * det(m);
    }
    return s;
}

}  // namespace

TEST_CASE("standard representation") {
    auto q = standard_rep(Mode::GaussianField);
    CHECK(q.dim() == 3);
    GiMatrix e = q.image(Word::parse("e"));
    GiMatrix expect(3, 3);
    expect(0, 0) = GaussianInt(0, 1);
    expect(1, 1) = GaussianInt(-1);
    expect(2, 2) = GaussianInt(0, 1);
    CHECK(e == expect);
    CHECK(q.image(Word()) == GiMatrix::identity(3));
    auto z = standard_rep(Mode::IntegerLattice);
    CHECK(z.dim() == 6);
    CHECK(det(to_integer(z.image(Word::parse("w")))) == 1);
    CHECK(det(to_integer(z.image(Word::parse("x")))) == 1);
    CHECK(q.action().size() == 6);
    for (const auto& r : {q, z, trivial_rep(), trivial_rep(Mode::IntegerLattice), dual_rep(), symn_rep(3)})
        CHECK_NOTHROW(r.validate());
}

TEST_CASE("symn basics") {
    CHECK(symn_rep(0).image(Word::parse("s x t")) == GiMatrix::identity(1));
    auto s1 = symn_rep(1), st = standard_rep(Mode::GaussianField);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        Word w = random_word(rng, 4);
        CHECK(s1.image(w) == st.image(w));
    }
    auto s5 = symn_rep(5);
    CHECK(s5.dim() == 21);
    GiMatrix e = s5.image(Word::parse("e"));
    auto basis = symn_basis(5);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            const auto& m = basis[j];
            GaussianInt want = i != j ? GaussianInt() : unit_power(m.a) * unit_power(2 * m.b) * unit_power(m.c);
            CHECK(e(i, j) == want);
        }
    CHECK(basis.front() == Monomial{5, 0, 0});
    CHECK(basis[1] == Monomial{4, 1, 0});
    CHECK(basis.back() == Monomial{0, 0, 5});
    for (std::size_t k = 0; k < basis.size(); ++k) CHECK(monomial_index(basis[k]) == k);
}

TEST_CASE("symn columns re-expand by brute-force substitution") {
    const int n = 3;
    auto rep = symn_rep(n);
    auto basis = symn_basis(n);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 5; ++t) {
        GMat3 g = eval_word(random_word(rng, 3));
        GiMatrix img = rep.image(g);
        for (std::size_t col = 0; col < basis.size(); ++col) {
            // factor list: which coordinate each of the n factors substitutes
            std::vector<int> f;
            for (int k = 0; k < basis[col].a; ++k) f.push_back(0);
            for (int k = 0; k < basis[col].b; ++k) f.push_back(1);
            for (int k = 0; k < basis[col].c; ++k) f.push_back(2);
            std::vector<GaussianInt> want(basis.size());
            for (int choice = 0; choice < 27; ++choice) {
                int ch[3] = {choice % 3, (choice / 3) % 3, choice / 9};
                GaussianInt coef(1);
                Monomial m{0, 0, 0};
                for (int k = 0; k < n; ++k) {
                    coef *= g(ch[k], f[k]);
                    (ch[k] == 0 ? m.a : ch[k] == 1 ? m.b : m.c)++;
                }
                want[monomial_index(m)] += coef;
            }
            for (std::size_t i = 0; i < basis.size(); ++i) CHECK(img(i, col) == want[i]);
        }
    }
}

TEST_CASE("homomorphism property") {
    std::mt19937_64 rng(3);
    std::vector<Representation> reps{standard_rep(Mode::GaussianField), standard_rep(Mode::IntegerLattice),
                                     dual_rep(), symn_rep(2), symn_rep(4), random_small_rep(rng)};
    for (const auto& r : reps) {
        CAPTURE(r.name());
        for (int t = 0; t < 5; ++t) {
            Word a = random_word(rng, 3), b = random_word(rng, 3);
            CHECK(r.image(a * b) == r.image(a) * r.image(b));
        }
    }
    for (int t = 0; t < 10; ++t) CHECK_NOTHROW(random_small_rep(rng).validate());
}

TEST_CASE("modular images match exact images") {
    std::mt19937_64 rng(4);
    auto r = symn_rep(6);
    for (int t = 0; t < 4; ++t) {
        GMat3 g = eval_word(random_word(rng, 4));
        for (const auto& pr : mod_primes()) CHECK(r.image_mod(g, pr) == reduce_mod(r.image(g), pr));
    }
}

TEST_CASE("fixed subspaces") {
    auto triv = trivial_rep();
    CHECK(fixed_subspace(triv, words({"e w", "x^2"})).size() == 1);
    auto st = standard_rep(Mode::GaussianField);
    CHECK(fixed_subspace(st, words({"e", "w", "t", "s"}), false).size() == 0);
    CHECK_THROWS_AS(fixed_subspace(st, words({"t"})), std::runtime_error);

    auto s4 = symn_rep(4);
    auto stab8 = words({"e w", "x^2"});
    SubspaceBasis f = fixed_subspace(s4, stab8);
    std::vector<GMat3> ms{eval_word(stab8[0]), eval_word(stab8[1])};
    CHECK(f.size() == averaging_rank(s4, ms));
    FiniteGroup h = close_subgroup(ms);
    CHECK(h.order() == 32);
    for (const auto& e : h.elements()) {
        GiMatrix m = s4.image(e);
        CHECK((m * f.columns - f.columns).is_zero());
    }
    for (const auto& pr : mod_primes()) CHECK(fixed_subspace_mod(s4, ms, pr).cols() == f.size());
}

TEST_CASE("integer fixed lattices are saturated") {
    auto z = standard_rep(Mode::IntegerLattice);
    for (const auto& gens : {words({"e w"}), words({"x^2"}), words({"s e w s^-1"}), words({"t e w"}), words({"e"})}) {
        SubspaceBasis f = fixed_subspace(z, gens);
        CHECK(f.mode == Mode::IntegerLattice);
        if (f.size()) CHECK(is_saturated(to_integer(f.columns)));
        CHECK(f.size() == averaging_rank(z, {eval_word(gens[0])}));
    }
}

TEST_CASE("no invariants in Sym^n") {
    for (int n = 1; n <= 20; ++n) {
        CAPTURE(n);
        auto r = symn_rep(n);
        std::vector<GMat3> gens;
        for (const auto& w : words({"e", "w", "t", "s"})) gens.push_back(eval_word(w));
        // the mod-p kernel is at least as large as the exact one
        CHECK(fixed_subspace_mod(r, gens, mod_primes()[0]).cols() == 0);
        if (n <= 6) CHECK(fixed_subspace(r, gens, false).size() == 0);
    }
}

TEST_CASE("eigenspaces") {
    CHECK(eigenspace(trivial_rep(), Word::parse("e"), 1).size() == 1);
    auto st = standard_rep(Mode::GaussianField);
    CHECK(eigenspace(st, Word::parse("e"), 1).size() == 0);
    CHECK(eigenspace(st, Word::parse("e"), -1).size() == 1);
    auto s2 = symn_rep(2);
    std::size_t expect = 0;
    for (const auto& m : symn_basis(2))
        if (unit_power(m.a) * unit_power(2 * m.b) * unit_power(m.c) == GaussianInt(1)) ++expect;
    CHECK(eigenspace(s2, Word::parse("e"), 1).size() == expect);
    CHECK_THROWS_AS(eigenspace(standard_rep(Mode::IntegerLattice), Word::parse("e"), 1), std::invalid_argument);
}
