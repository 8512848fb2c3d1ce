#include "picard/representation.hpp"

#include <stdexcept>
#include <utility>

namespace picard {

std::string mode_name(Mode m) { return m == Mode::IntegerLattice ? "Z" : "Qi"; }

Representation::Representation(std::string name, Mode mode, std::size_t dim, Functor f, ModFunctor fm)
    : name_(std::move(name)), mode_(mode), dim_(dim), f_(std::move(f)), fm_(std::move(fm)) {
    if (!f_) throw std::invalid_argument("representation needs an image functor");
}

GiMatrix Representation::image(const GMat3& g) const {
    GiMatrix m = f_(g);
    if (m.rows() != dim_ || m.cols() != dim_) throw std::logic_error(name_ + ": image has the wrong size");
    return m;
}

ModMatrix Representation::image_mod(const GMat3& g, const ModPrime& pr) const {
    if (fm_) return fm_(g, pr);
    return reduce_mod(image(g), pr);
}

std::map<std::string, GiMatrix> Representation::action() const {
    std::map<std::string, GiMatrix> out;
    for (Gen g : {Gen::Eps, Gen::W, Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Xi})
        out.emplace(gen_symbol(g), image(generator_matrix(g)));
    return out;
}

void Representation::validate() const {
    const GiMatrix id = GiMatrix::identity(dim_);
    for (Gen g : {Gen::Eps, Gen::W, Gen::Sigma, Gen::SigmaCheck, Gen::Tau, Gen::Xi}) {
        const GMat3 m = generator_matrix(g);
        GiMatrix a = image(m), b = image(inverse(m));
        if (!(a * b == id)) throw std::logic_error(name_ + ": image of " + gen_symbol(g) + " is not invertible");
        if (mode_ == Mode::IntegerLattice)
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j)
                    if (a(i, j).im() != 0) throw std::logic_error(name_ + ": non-integral lattice image");
    }
    for (const char* rel : {"e^4", "w^2 e^-2", "x^2 s t^-1 e^-1"}) {
        Word w = Word::parse(rel);
        GiMatrix prod = id;
        for (const Letter& l : w.letters()) prod = prod * image(power(generator_matrix(l.gen), l.exp));
        if (!(prod == id)) throw std::logic_error(name_ + ": relation " + rel + " fails");
    }
}

Representation trivial_rep(Mode mode) {
    return Representation("trivial", mode, 1, [](const GMat3&) { return GiMatrix::identity(1); });
}

Representation standard_rep(Mode mode) {
    if (mode == Mode::GaussianField)
        return Representation("standard", mode, 3, [](const GMat3& g) { return to_gaussian(g); });
    return Representation("standard", mode, 6,
                          [](const GMat3& g) { return from_integer(realify(to_gaussian(g))); });
}

Representation dual_rep() {
    return Representation("dual", Mode::GaussianField, 3,
                          [](const GMat3& g) { return to_gaussian(inverse(g).transpose()); });
}

// ---- Sym^n ----

std::size_t monomial_index(const Monomial& m) {
    const int k = m.a + m.b + m.c;
    const std::size_t s = static_cast<std::size_t>(k - m.a);
    return s * (s + 1) / 2 + (s - static_cast<std::size_t>(m.b));
}

std::vector<Monomial> symn_basis(int n) {
    std::vector<Monomial> out;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b) out.push_back({a, b, n - a - b});
    return out;
}

namespace {

std::size_t count_monomials(int k) { return static_cast<std::size_t>(k + 1) * (k + 2) / 2; }

// Columns of g as linear forms; poly of degree k times column j.
template <class T, class Ops>
std::vector<T> times_linear(const std::vector<T>& p, int k, const std::array<T, 3>& lin, const Ops& ops) {
    std::vector<T> out(count_monomials(k + 1), ops.zero());
    for (const Monomial& m : symn_basis(k)) {
        const T& x = p[monomial_index(m)];
        if (ops.is_zero(x)) continue;
        const Monomial up[3] = {{m.a + 1, m.b, m.c}, {m.a, m.b + 1, m.c}, {m.a, m.b, m.c + 1}};
        for (int v = 0; v < 3; ++v) {
            if (ops.is_zero(lin[v])) continue;
            T& slot = out[monomial_index(up[v])];
            slot = ops.add(slot, ops.mul(x, lin[v]));
        }
    }
    return out;
}

template <class T, class Ops>
Matrix<T> sym_power(const std::array<std::array<T, 3>, 3>& g, int n, const Ops& ops) {
    const auto basis = symn_basis(n);
    Matrix<T> out(basis.size(), basis.size());
    std::array<std::array<T, 3>, 3> cols;
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) cols[j][i] = g[i][j];
    std::vector<T> pa{ops.one()};
    for (int a = 0; a <= n; ++a) {
        std::vector<T> pab = pa;
        for (int b = 0; a + b <= n; ++b) {
            std::vector<T> p = pab;
            const int c = n - a - b;
            for (int k = 0; k < c; ++k) p = times_linear(p, a + b + k, cols[2], ops);
            const std::size_t col = monomial_index({a, b, c});
            for (std::size_t i = 0; i < p.size(); ++i) out(i, col) = p[i];
            if (a + b < n) pab = times_linear(pab, a + b, cols[1], ops);
        }
        if (a < n) pa = times_linear(pa, a, cols[0], ops);
    }
    return out;
}

struct ExactOps {
    GaussianInt zero() const { return {}; }
    GaussianInt one() const { return GaussianInt(1); }
    bool is_zero(const GaussianInt& x) const { return x.is_zero(); }
    GaussianInt add(const GaussianInt& a, const GaussianInt& b) const { return a + b; }
    GaussianInt mul(const GaussianInt& a, const GaussianInt& b) const { return a * b; }
};

struct ModOps {
    std::uint64_t p;
    std::uint32_t zero() const { return 0; }
    std::uint32_t one() const { return 1; }
    bool is_zero(std::uint32_t x) const { return x == 0; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t(a) + b) % p); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(std::uint64_t(a) * b % p); }
};

}  // namespace

Representation symn_rep(int n) {
    if (n < 0) throw std::invalid_argument("symn_rep needs n >= 0");
    auto exact = [n](const GMat3& g) {
        std::array<std::array<GaussianInt, 3>, 3> a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] = g(i, j);
        return sym_power(a, n, ExactOps{});
    };
    auto modular = [n](const GMat3& g, const ModPrime& pr) {
        std::array<std::array<std::uint32_t, 3>, 3> a;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) a[i][j] = reduce_mod(g(i, j), pr);
        return sym_power(a, n, ModOps{pr.p});
    };
    return Representation("symn:" + std::to_string(n), Mode::GaussianField, count_monomials(n), exact, modular);
}

// ---- combinations ----

Representation direct_sum(const std::vector<Representation>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
    std::size_t dim = 0;
    std::string name;
    for (const auto& r : parts) {
        if (r.mode() != parts[0].mode()) throw std::invalid_argument("direct_sum: mixed modes");
        dim += r.dim();
        name += (name.empty() ? "" : "+") + r.name();
    }
    auto f = [parts, dim](const GMat3& g) {
        GiMatrix m(dim, dim);
        std::size_t off = 0;
        for (const auto& r : parts) {
            GiMatrix b = r.image(g);
            for (std::size_t i = 0; i < r.dim(); ++i)
                for (std::size_t j = 0; j < r.dim(); ++j) m(off + i, off + j) = b(i, j);
            off += r.dim();
        }
        return m;
    };
    return Representation(name, parts[0].mode(), dim, f);
}

Representation conjugated(const Representation& rep, const GiMatrix& p, const GiMatrix& p_inv) {
    if (!(p * p_inv == GiMatrix::identity(rep.dim()))) throw std::invalid_argument("conjugated: p_inv is not the inverse");
    auto f = [rep, p, p_inv](const GMat3& g) { return p * rep.image(g) * p_inv; };
    return Representation("conj(" + rep.name() + ")", rep.mode(), rep.dim(), f);
}

Representation random_small_rep(std::mt19937_64& rng) {
    std::vector<Representation> parts;
    const int blocks = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < blocks; ++k) {
        switch (rng() % 4) {
        case 0: parts.push_back(trivial_rep()); break;
        case 1: parts.push_back(standard_rep(Mode::GaussianField)); break;
        case 2: parts.push_back(dual_rep()); break;
        default: parts.push_back(symn_rep(2)); break;
        }
    }
    Representation sum = direct_sum(parts);
    const std::size_t d = sum.dim();
    GiMatrix p = GiMatrix::identity(d), pinv = GiMatrix::identity(d);
    if (d > 1) {
        // product of elementary transvections I + c E_ij
        std::uniform_int_distribution<long> coef(-2, 2);
        for (int step = 0; step < 3 * static_cast<int>(d); ++step) {
            const std::size_t i = rng() % d, j = rng() % d;
            if (i == j) continue;
            const GaussianInt c(coef(rng), coef(rng));
            for (std::size_t r = 0; r < d; ++r) p(r, j) += p(r, i) * c;       // p <- p (I + c E_ij)
            for (std::size_t s = 0; s < d; ++s) pinv(i, s) -= c * pinv(j, s);  // pinv <- (I - c E_ij) pinv
        }
    }
    return conjugated(sum, p, pinv);
}

// ---- fixed vectors ----

namespace {

GiMatrix stacked(const Representation& rep, const std::vector<std::pair<GMat3, GaussianInt>>& conds) {
    const std::size_t d = rep.dim();
    std::vector<GiMatrix> blocks;
    for (const auto& [g, lambda] : conds) {
        GiMatrix m = rep.image(g);
        for (std::size_t i = 0; i < d; ++i) m(i, i) -= lambda;
        blocks.push_back(std::move(m));
    }
    return vconcat(blocks, d);
}

SubspaceBasis kernel_basis(const Representation& rep, const std::vector<std::pair<GMat3, GaussianInt>>& conds) {
    SubspaceBasis out;
    out.mode = rep.mode();
    if (conds.empty()) {
        out.columns = GiMatrix::identity(rep.dim());
        return out;
    }
    GiMatrix a = stacked(rep, conds);
    if (rep.mode() == Mode::IntegerLattice) out.columns = from_integer(integer_kernel(to_integer(a)));
    else out.columns = kernel_exact(a);
    return out;
}

}  // namespace

SubspaceBasis fixed_subspace(const Representation& rep, const std::vector<GMat3>& gens, bool require_finite) {
    if (require_finite) close_subgroup(gens);
    std::vector<std::pair<GMat3, GaussianInt>> conds;
    for (const auto& g : gens) conds.emplace_back(g, GaussianInt(1));
    return kernel_basis(rep, conds);
}

SubspaceBasis fixed_subspace(const Representation& rep, const std::vector<Word>& gens, bool require_finite) {
    std::vector<GMat3> ms;
    for (const auto& w : gens) ms.push_back(eval_word(w));
    return fixed_subspace(rep, ms, require_finite);
}

ModMatrix fixed_subspace_mod(const Representation& rep, const std::vector<GMat3>& gens, const ModPrime& pr) {
    const std::size_t d = rep.dim();
    if (gens.empty()) return ModMatrix::identity(d);
    std::vector<ModMatrix> blocks;
    for (const auto& g : gens) {
        ModMatrix m = rep.image_mod(g, pr);
        for (std::size_t i = 0; i < d; ++i) m(i, i) = (m(i, i) + pr.p - 1) % pr.p;
        blocks.push_back(std::move(m));
    }
    return kernel_mod(vconcat(blocks, d), pr);
}

std::size_t averaging_rank(const Representation& rep, const std::vector<GMat3>& gens) {
    FiniteGroup h = close_subgroup(gens);
    GiMatrix sum(rep.dim(), rep.dim());
    for (const auto& e : h.elements()) sum = sum + rep.image(e);
    return rank_exact(sum);
}

SubspaceBasis eigenspace(const Representation& rep, const Word& g, int lambda) {
    return joint_eigenspace(rep, {{g, lambda}});
}

SubspaceBasis joint_eigenspace(const Representation& rep, const std::vector<std::pair<Word, int>>& conds) {
    if (rep.mode() != Mode::GaussianField) throw std::invalid_argument("eigenspaces need GaussianField mode");
    std::vector<std::pair<GMat3, GaussianInt>> c;
    for (const auto& [w, lambda] : conds) {
        if (lambda != 1 && lambda != -1) throw std::invalid_argument("eigenvalue must be +1 or -1");
        c.emplace_back(eval_word(w), GaussianInt(lambda));
    }
    return kernel_basis(rep, c);
}

}  // namespace picard
