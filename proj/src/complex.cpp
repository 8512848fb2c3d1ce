#include "picard/complex.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace picard {

std::string method_name(RankMethod m) { return m == RankMethod::Exact ? "exact" : "modular"; }

std::string DegreeGroup::str(Mode mode) const {
    if (mode == Mode::GaussianField) return std::to_string(rank);
    std::vector<std::string> parts;
    if (rank == 1) parts.push_back("Z");
    else if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
    for (const auto& t : torsion) parts.push_back("Z/" + t.get_str());
    if (parts.empty()) return "0";
    std::string s = parts[0];
    for (std::size_t k = 1; k < parts.size(); ++k) s += " + " + parts[k];
    return s;
}

std::array<std::size_t, 4> CohomologyResult::dims() const {
    return {h[0].rank, h[1].rank, h[2].rank, h[3].rank};
}

long CohomologyResult::euler_cochains() const {
    long s = 0;
    for (int p = 0; p < 4; ++p) s += (p % 2 ? -1L : 1L) * static_cast<long>(cochain_dims[p]);
    return s;
}

long CohomologyResult::euler_cohomology() const {
    long s = 0;
    for (int p = 0; p < 4; ++p) s += (p % 2 ? -1L : 1L) * static_cast<long>(h[p].rank);
    return s;
}

namespace {

std::vector<GMat3> stabilizer_matrices(const CellDatum& c) {
    std::vector<GMat3> out;
    for (const auto& w : c.stabilizer) out.push_back(eval_word(w));
    return out;
}

// Gaussian-integral matrix with the same column space, by scaling columns.
GiMatrix clear_columns(const QiMatrix& a) {
    GiMatrix out(a.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        mpz_class den = 1;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).re().get_den_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a(i, j).im().get_den_mpz_t());
        }
        for (std::size_t i = 0; i < a.rows(); ++i) {
            mpq_class re = a(i, j).re() * den, im = a(i, j).im() * den;
            out(i, j) = GaussianInt(mpz_class(re.get_num()), mpz_class(im.get_num()));
        }
    }
    return out;
}

ZMatrix integral_part(const QiMatrix& a) {
    ZMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GaussianRat& x = a(i, j);
            if (x.im() != 0 || x.re().get_den() != 1) throw std::logic_error("coordinates not integral");
            out(i, j) = x.re().get_num();
        }
    return out;
}

template <class T>
Matrix<T> row_block(const Matrix<T>& x, std::size_t first, std::size_t count) {
    Matrix<T> m(count, x.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(first + i, j);
    return m;
}

template <class T>
void add_block(Matrix<T>& dst, std::size_t r0, std::size_t c0, const Matrix<T>& b, int sign) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (sign > 0) dst(r0 + i, c0 + j) += b(i, j);
            else dst(r0 + i, c0 + j) -= b(i, j);
        }
}

void add_block_mod(ModMatrix& dst, std::size_t r0, std::size_t c0, const ModMatrix& b, int sign, std::uint32_t p) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            const std::uint64_t x = dst(r0 + i, c0 + j), y = b(i, j);
            dst(r0 + i, c0 + j) = static_cast<std::uint32_t>(sign > 0 ? (x + y) % p : (x + p - y) % p);
        }
}

class ImageCache {
public:
    explicit ImageCache(const Representation& rep) : rep_(rep) {}
    const GiMatrix& operator()(const Word& w) {
        auto key = w.str();
        auto it = exact_.find(key);
        if (it == exact_.end()) it = exact_.emplace(key, rep_.image(w)).first;
        return it->second;
    }

private:
    const Representation& rep_;
    std::map<std::string, GiMatrix> exact_;
};

class ModImageCache {
public:
    ModImageCache(const Representation& rep, const ModPrime& pr) : rep_(rep), pr_(pr) {}
    const ModMatrix& operator()(const Word& w) {
        auto key = w.str();
        auto it = mod_.find(key);
        if (it == mod_.end()) it = mod_.emplace(key, rep_.image_mod(eval_word(w), pr_)).first;
        return it->second;
    }

private:
    const Representation& rep_;
    ModPrime pr_;
    std::map<std::string, ModMatrix> mod_;
};

// Ambient images of the basis of C^p, one dim-row block per (p+1)-cell.
ModMatrix images_mod(const CellDataset& cells, int p, const std::vector<ModMatrix>& bases, std::size_t dim,
                     ModImageCache& img, const ModPrime& pr) {
    std::size_t cols = 0;
    for (const auto& b : bases) cols += b.cols();
    ModMatrix y(cells.cells(p + 1).size() * dim, cols);
    std::vector<std::size_t> off(bases.size() + 1, 0);
    for (std::size_t c = 0; c < bases.size(); ++c) off[c + 1] = off[c] + bases[c].cols();
    for (const auto& t : differential_terms(cells, p)) {
        const ModMatrix& b = bases[t.col];
        if (b.cols() == 0) continue;
        ModMatrix blk = t.word.empty() ? b : mul_mod(img(t.word), b, pr);
        add_block_mod(y, t.row * dim, off[t.col], blk, t.sign, pr.p);
    }
    return y;
}

struct ModularBases {
    std::array<std::vector<ModMatrix>, 4> bases;
    std::array<std::size_t, 4> dims{};
};

ModularBases modular_bases(const Representation& rep, const CellDataset& cells, const ModPrime& pr) {
    ModularBases mb;
    for (int p = 0; p < 4; ++p)
        for (const auto& c : cells.cells(p)) {
            mb.bases[p].push_back(fixed_subspace_mod(rep, stabilizer_matrices(c), pr));
            mb.dims[p] += mb.bases[p].back().cols();
        }
    return mb;
}

bool use_exact(const Representation& rep, const CohomologyOptions& opts) {
    if (rep.mode() == Mode::IntegerLattice) return true;
    return !opts.force_modular && rep.dim() <= opts.exact_dim_limit;
}

}  // namespace

AssembledComplex assemble(const Representation& rep, const CellDataset& cells) {
    AssembledComplex a;
    a.mode = rep.mode();
    a.ambient_dim = rep.dim();
    for (int p = 0; p < 4; ++p)
        for (const auto& c : cells.cells(p)) {
            a.bases[p].push_back(fixed_subspace(rep, stabilizer_matrices(c)));
            a.dims[p] += a.bases[p].back().size();
        }
    ImageCache img(rep);
    for (int p = 0; p < 3; ++p) {
        const auto& src = a.bases[p];
        const auto& dst = a.bases[p + 1];
        std::vector<std::size_t> so(src.size() + 1, 0), to(dst.size() + 1, 0);
        for (std::size_t c = 0; c < src.size(); ++c) so[c + 1] = so[c] + src[c].size();
        for (std::size_t r = 0; r < dst.size(); ++r) to[r + 1] = to[r] + dst[r].size();
        QiMatrix d(a.dims[p + 1], a.dims[p]);
        const auto terms = differential_terms(cells, p);
        const auto& names_src = cells.cells(p);
        const auto& names_dst = cells.cells(p + 1);
        for (std::size_t c = 0; c < src.size(); ++c) {
            if (src[c].size() == 0) continue;
            for (std::size_t r = 0; r < dst.size(); ++r) {
                GiMatrix y(a.ambient_dim, src[c].size());
                bool any = false;
                for (const auto& t : terms) {
                    if (t.row != r || t.col != c) continue;
                    any = true;
                    GiMatrix blk = t.word.empty() ? src[c].columns : img(t.word) * src[c].columns;
                    add_block(y, 0, 0, blk, t.sign);
                }
                if (!any) continue;
                const std::string where =
                    "d" + std::to_string(p) + " " + names_src[c].name + " -> " + names_dst[r].name;
                if (rep.mode() == Mode::IntegerLattice) {
                    auto x = solve_integral(to_integer(dst[r].columns), to_integer(y));
                    if (!x) throw std::runtime_error("saturation violated: " + where);
                    for (std::size_t i = 0; i < x->rows(); ++i)
                        for (std::size_t j = 0; j < x->cols(); ++j)
                            d(to[r] + i, so[c] + j) = GaussianRat(mpq_class((*x)(i, j)), mpq_class(0));
                } else {
                    auto x = solve_exact(dst[r].columns, y);
                    if (!x) throw std::runtime_error("image leaves the fixed submodule: " + where);
                    for (std::size_t i = 0; i < x->rows(); ++i)
                        for (std::size_t j = 0; j < x->cols(); ++j) d(to[r] + i, so[c] + j) = (*x)(i, j);
                }
            }
        }
        a.differentials[p] = std::move(d);
    }
    return a;
}

GiMatrix apply_ambient(const Representation& rep, const CellDataset& cells, int p, const GiMatrix& x) {
    const std::size_t dim = rep.dim();
    if (x.rows() != cells.cells(p).size() * dim) throw std::invalid_argument("apply_ambient: wrong row count");
    GiMatrix out(cells.cells(p + 1).size() * dim, x.cols());
    ImageCache img(rep);
    for (const auto& t : differential_terms(cells, p)) {
        GiMatrix b = row_block(x, t.col * dim, dim);
        if (!t.word.empty()) b = img(t.word) * b;
        add_block(out, t.row * dim, 0, b, t.sign);
    }
    return out;
}

ModMatrix apply_ambient_mod(const Representation& rep, const CellDataset& cells, int p, const ModMatrix& x,
                            const ModPrime& pr) {
    const std::size_t dim = rep.dim();
    if (x.rows() != cells.cells(p).size() * dim) throw std::invalid_argument("apply_ambient: wrong row count");
    ModMatrix out(cells.cells(p + 1).size() * dim, x.cols());
    ModImageCache img(rep, pr);
    for (const auto& t : differential_terms(cells, p)) {
        ModMatrix b = row_block(x, t.col * dim, dim);
        if (!t.word.empty()) b = mul_mod(img(t.word), b, pr);
        add_block_mod(out, t.row * dim, 0, b, t.sign, pr.p);
    }
    return out;
}

bool dd_zero_mod(const Representation& rep, const ModPrime& pr, const CellDataset& cells) {
    const std::size_t dim = rep.dim();
    for (int p = 0; p < 2; ++p) {
        const auto& cs = cells.cells(p);
        std::vector<ModMatrix> fixed;
        std::size_t total = 0;
        for (const auto& c : cs) {
            fixed.push_back(fixed_subspace_mod(rep, stabilizer_matrices(c), pr));
            total += fixed.back().cols();
        }
        if (total == 0) continue;
        ModMatrix x(cs.size() * dim, total);
        std::size_t off = 0;
        for (std::size_t c = 0; c < cs.size(); ++c) {
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < fixed[c].cols(); ++j) x(c * dim + i, off + j) = fixed[c](i, j);
            off += fixed[c].cols();
        }
        ModMatrix y = apply_ambient_mod(rep, cells, p, x, pr);
        if (!apply_ambient_mod(rep, cells, p + 1, y, pr).is_zero()) return false;
    }
    return true;
}

bool dd_zero(const AssembledComplex& c) {
    for (int p = 0; p < 2; ++p) {
        const QiMatrix& a = c.differentials[p];
        const QiMatrix& b = c.differentials[p + 1];
        if (a.cols() == 0 || b.rows() == 0) continue;
        if (!(b * a).is_zero()) return false;
    }
    return true;
}

CohomologyResult cohomology(const Representation& rep, const CohomologyOptions& opts, const CellDataset& cells) {
    CohomologyResult res;
    res.rep = rep.name();
    res.mode = rep.mode();
    std::array<std::vector<mpz_class>, 3> smith;
    if (use_exact(rep, opts)) {
        res.method = RankMethod::Exact;
        AssembledComplex a = assemble(rep, cells);
        res.cochain_dims = a.dims;
        res.dd_zero = dd_zero(a);
        if (!res.dd_zero) throw std::logic_error(rep.name() + ": D D != 0");
        for (int p = 0; p < 3; ++p) {
            const QiMatrix& d = a.differentials[p];
            if (rep.mode() == Mode::IntegerLattice) {
                smith[p] = smith_invariants(integral_part(d));
                res.ranks[p] = smith[p].size();
            } else {
                res.ranks[p] = rank_exact(clear_columns(d));
            }
        }
    } else {
        res.method = RankMethod::Modular;
        const std::size_t np = std::min<std::size_t>(std::max<std::size_t>(opts.primes, 1), mod_primes().size());
        for (std::size_t k = 0; k < np; ++k) {
            const ModPrime& pr = mod_primes()[k];
            res.primes.push_back(pr.p);
            ModularBases mb = modular_bases(rep, cells, pr);
            if (k == 0) res.cochain_dims = mb.dims;
            else if (mb.dims != res.cochain_dims) throw std::logic_error(rep.name() + ": fixed dimensions depend on p");
            ModImageCache img(rep, pr);
            for (int p = 0; p < 3; ++p) {
                ModMatrix y = images_mod(cells, p, mb.bases[p], rep.dim(), img, pr);
                res.ranks[p] = std::max(res.ranks[p], rank_mod(std::move(y), pr));
            }
        }
    }
    for (int p = 0; p < 4; ++p) {
        const std::size_t out = p < 3 ? res.ranks[p] : 0, in = p > 0 ? res.ranks[p - 1] : 0;
        if (out + in > res.cochain_dims[p]) throw std::logic_error(rep.name() + ": ranks exceed the cochain dimension");
        res.h[p].rank = res.cochain_dims[p] - out - in;
        if (p > 0)
            for (const auto& s : smith[p - 1])
                if (s > 1) res.h[p].torsion.push_back(s);
    }
    return res;
}

std::vector<CohomologyResult> symn_table(int first, int last, const CohomologyOptions& opts, std::size_t jobs) {
    if (first < 0 || last < first) throw std::invalid_argument("symn_table: bad range");
    const std::size_t count = static_cast<std::size_t>(last - first + 1);
    std::vector<std::optional<CohomologyResult>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next++) < count;) {
            try {
                slots[k] = cohomology(symn_rep(first + static_cast<int>(k)), opts);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    jobs = std::clamp<std::size_t>(jobs, 1, count);
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    std::vector<CohomologyResult> out;
    for (std::size_t k = 0; k < count; ++k) {
        if (errors[k]) std::rethrow_exception(errors[k]);
        out.push_back(std::move(*slots[k]));
    }
    return out;
}

H0Check h0_identity_check(const Representation& rep, const CohomologyOptions& opts, const CellDataset& cells) {
    H0Check chk;
    std::vector<Word> gamma_gens;
    for (const char* w : {"e", "w", "t", "s"}) gamma_gens.push_back(Word::parse(w));
    const std::size_t dim = rep.dim(), n0 = cells.cells(0).size();
    if (use_exact(rep, opts)) {
        chk.method = RankMethod::Exact;
        AssembledComplex a = assemble(rep, cells);
        GiMatrix f = fixed_subspace(rep, gamma_gens, false).columns;
        chk.fixed_dim = f.cols();
        GiMatrix diag = vconcat(std::vector<GiMatrix>(n0, f), f.cols());
        GiMatrix k = rep.mode() == Mode::IntegerLattice
                         ? from_integer(integer_kernel(integral_part(a.differentials[0])))
                         : kernel_exact(clear_columns(a.differentials[0]));
        chk.kernel_dim = k.cols();
        GiMatrix amb(n0 * dim, k.cols());
        std::size_t off = 0;
        for (std::size_t c = 0; c < n0; ++c) {
            const GiMatrix& b = a.bases[0][c].columns;
            add_block(amb, c * dim, 0, b * row_block(k, off, b.cols()), 1);
            off += b.cols();
        }
        if (chk.kernel_dim != chk.fixed_dim) return chk;
        if (rep.mode() == Mode::IntegerLattice) {
            ZMatrix za = to_integer(amb), zd = to_integer(diag);
            chk.equal = solve_integral(za, zd).has_value() && solve_integral(zd, za).has_value();
        } else {
            chk.equal = rank_exact(hconcat(std::vector<GiMatrix>{amb, diag}, amb.rows())) == chk.kernel_dim;
        }
        return chk;
    }
    chk.method = RankMethod::Modular;
    const ModPrime& pr = mod_primes()[0];
    ModularBases mb = modular_bases(rep, cells, pr);
    ModImageCache img(rep, pr);
    ModMatrix k = kernel_mod(images_mod(cells, 0, mb.bases[0], dim, img, pr), pr);
    std::vector<GMat3> gm;
    for (const auto& w : gamma_gens) gm.push_back(eval_word(w));
    ModMatrix f = fixed_subspace_mod(rep, gm, pr);
    chk.kernel_dim = k.cols();
    chk.fixed_dim = f.cols();
    if (chk.kernel_dim != chk.fixed_dim) return chk;
    ModMatrix amb(n0 * dim, k.cols());
    std::size_t off = 0;
    for (std::size_t c = 0; c < n0; ++c) {
        const ModMatrix& b = mb.bases[0][c];
        add_block_mod(amb, c * dim, 0, mul_mod(b, row_block(k, off, b.cols()), pr), 1, pr.p);
        off += b.cols();
    }
    ModMatrix diag = vconcat(std::vector<ModMatrix>(n0, f), f.cols());
    chk.equal = rank_mod(hconcat(std::vector<ModMatrix>{amb, diag}, amb.rows()), pr) == chk.kernel_dim;
    return chk;
}

H3Bounds h3_bounds(const Representation& rep, std::size_t actual_h3) {
    H3Bounds b;
    b.actual = actual_h3;
    b.rank_bound = rep.dim() - fixed_subspace(rep, std::vector<Word>{Word::parse("e w")}).size();
    if (rep.mode() == Mode::GaussianField) {
        b.eigen_bound = joint_eigenspace(rep, {{Word::parse("e"), 1}, {Word::parse("w"), -1}}).size();
        b.holds = b.actual <= *b.eigen_bound && *b.eigen_bound <= b.rank_bound;
    } else {
        b.holds = b.actual <= b.rank_bound;
    }
    return b;
}

GroupRingCheck group_ring_dd_check(const CellDataset& cells) {
    GroupRingCheck out;
    out.ok = true;
    std::ostringstream detail;
    for (int p = 0; p < 2; ++p) {
        const auto t0 = differential_terms(cells, p), t1 = differential_terms(cells, p + 1);
        std::vector<GMat3> m0, m1;
        for (const auto& t : t0) m0.push_back(eval_word(t.word));
        for (const auto& t : t1) m1.push_back(eval_word(t.word));
        const auto& src = cells.cells(p);
        const auto& dst = cells.cells(p + 2);
        for (std::size_t c = 0; c < src.size(); ++c) {
            auto gens = stabilizer_matrices(src[c]);
            std::vector<GMat3> h = gens.empty() ? std::vector<GMat3>{GMat3::identity()} : close_subgroup(gens).elements();
            for (std::size_t r = 0; r < dst.size(); ++r) {
                std::map<GMat3, long> sum;
                for (std::size_t a = 0; a < t1.size(); ++a) {
                    if (t1[a].row != r) continue;
                    for (std::size_t b = 0; b < t0.size(); ++b) {
                        if (t0[b].row != t1[a].col || t0[b].col != c) continue;
                        const GMat3 g = m1[a] * m0[b];
                        for (const auto& x : h) sum[g * x] += t1[a].sign * t0[b].sign;
                    }
                }
                std::size_t bad = 0;
                for (const auto& [g, v] : sum)
                    if (v != 0) ++bad;
                if (bad) {
                    out.ok = false;
                    detail << "d" << p + 1 << " d" << p << ": " << src[c].name << " -> " << dst[r].name << " leaves "
                           << bad << " uncancelled group elements; ";
                }
            }
        }
    }
    out.detail = out.ok ? "all composite blocks cancel in Z[Gamma]" : detail.str();
    return out;
}

std::vector<std::string> stabilizer_mismatches(const CellDataset& cells) {
    std::vector<std::string> out;
    for (int p = 0; p < 4; ++p)
        for (const auto& c : cells.cells(p)) {
            auto gens = stabilizer_matrices(c);
            std::size_t order = 1;
            try {
                if (!gens.empty()) order = close_subgroup(gens).order();
            } catch (const std::runtime_error&) {
                out.push_back(c.name + ": stabilizer is not finite");
                continue;
            }
            if (order != c.order)
                out.push_back(c.name + ": order " + std::to_string(order) + ", stated " + std::to_string(c.order));
        }
    return out;
}

}  // namespace picard
