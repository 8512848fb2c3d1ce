#include "picard/linalg.hpp"

#include <algorithm>
#include <utility>

namespace picard {

GiMatrix to_gaussian(const GMat3& g) {
    GiMatrix m(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m(i, j) = g(i, j);
    return m;
}

QiMatrix to_rational(const GiMatrix& a) {
    QiMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = GaussianRat(a(i, j));
    return m;
}

ZMatrix realify(const GiMatrix& a) {
    ZMatrix m(2 * a.rows(), 2 * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GaussianInt& z = a(i, j);
            m(2 * i, 2 * j) = z.re();
            m(2 * i, 2 * j + 1) = -z.im();
            m(2 * i + 1, 2 * j) = z.im();
            m(2 * i + 1, 2 * j + 1) = z.re();
        }
    return m;
}

ZMatrix to_integer(const GiMatrix& a) {
    ZMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).im() != 0) throw std::invalid_argument("to_integer: non-real entry");
            m(i, j) = a(i, j).re();
        }
    return m;
}

GiMatrix from_integer(const ZMatrix& a) {
    GiMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = GaussianInt(a(i, j), mpz_class(0));
    return m;
}

namespace {

template <class T>
void swap_rows(Matrix<T>& a, std::size_t i, std::size_t k) {
    if (i == k) return;
    std::swap_ranges(a.row(i), a.row(i) + a.cols(), a.row(k));
}

// In-place reduced row echelon form over a field; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& a, std::size_t ncols) {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && a(p, c) == T(0)) ++p;
        if (p == a.rows()) continue;
        swap_rows(a, r, p);
        const T inv = T(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == T(0)) continue;
            const T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

GaussianInt primitive_scale(std::vector<GaussianRat>& v, std::vector<GaussianInt>& out) {
    mpz_class den = 1;
    for (const auto& x : v) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.re().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.im().get_den_mpz_t());
    }
    out.clear();
    GaussianInt g;
    for (const auto& x : v) {
        mpq_class re = x.re() * den, im = x.im() * den;
        out.emplace_back(mpz_class(re.get_num()), mpz_class(im.get_num()));
        g = gcd(g, out.back());
    }
    if (!g.is_zero() && !g.is_unit())
        for (auto& z : out) z = *exact_div(z, g);
    return g;
}

}  // namespace

std::size_t rank_exact(GiMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    GaussianInt prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c).is_zero()) ++p;
        if (p == m) continue;
        swap_rows(a, r, p);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                GaussianInt t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
                auto q = exact_div(t, prev);
                if (!q) throw std::logic_error("Bareiss step not exact");
                a(i, j) = std::move(*q);
            }
            a(i, c) = GaussianInt();
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

GiMatrix kernel_exact(const GiMatrix& a) {
    QiMatrix q = to_rational(a);
    const std::size_t n = a.cols();
    auto piv = rref(q, n);
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<GaussianInt>> cols;
    std::vector<GaussianRat> v(n);
    std::vector<GaussianInt> out;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        std::fill(v.begin(), v.end(), GaussianRat());
        v[f] = GaussianRat(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -q(k, f);
        primitive_scale(v, out);
        cols.push_back(out);
    }
    GiMatrix k(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) k(i, j) = cols[j][i];
    return k;
}

std::optional<QiMatrix> solve_exact(const GiMatrix& b, const GiMatrix& y) {
    if (b.rows() != y.rows()) throw std::invalid_argument("solve_exact: shape mismatch");
    const std::size_t n = b.cols(), k = y.cols();
    QiMatrix aug(b.rows(), n + k);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = GaussianRat(b(i, j));
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = GaussianRat(y(i, j));
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) throw std::invalid_argument("solve_exact: basis not of full column rank");
    for (std::size_t i = n; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (!aug(i, n + j).is_zero()) return std::nullopt;
    QiMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) x(i, j) = aug(i, n + j);
    return x;
}

ZMatrix integer_kernel(const ZMatrix& a) {
    // Unimodular column operations on [a; I].
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<mpz_class>> cols(n, std::vector<mpz_class>(m + n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) cols[j][i] = a(i, j);
        cols[j][m + j] = 1;
    }
    std::size_t r = 0;
    for (std::size_t i = 0; i < m && r < n; ++i) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t j = r; j < n; ++j)
                if (cols[j][i] != 0 && (best == n || abs(cols[j][i]) < abs(cols[best][i]))) best = j;
            if (best == n) break;
            std::swap(cols[r], cols[best]);
            bool clean = true;
            for (std::size_t j = r + 1; j < n; ++j) {
                if (cols[j][i] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[r][i].get_mpz_t());
                for (std::size_t t = 0; t < m + n; ++t) cols[j][t] -= q * cols[r][t];
                if (cols[j][i] != 0) clean = false;
            }
            if (clean) {
                ++r;
                break;
            }
        }
    }
    ZMatrix k(n, n - r);
    for (std::size_t j = r; j < n; ++j)
        for (std::size_t t = 0; t < n; ++t) k(t, j - r) = cols[j][m + t];
    return k;
}

std::vector<mpz_class> smith_invariants(ZMatrix a) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<mpz_class> out;
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block to (t, t)
            std::size_t bi = m, bj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (bi == m || abs(a(i, j)) < abs(a(bi, bj)))) {
                        bi = i;
                        bj = j;
                    }
            if (bi == m) return out;
            swap_rows(a, t, bi);
            for (std::size_t i = 0; i < m; ++i) std::swap(a(i, t), a(i, bj));
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t j = t; j < n; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
                for (std::size_t i = t; i < m; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the trailing block
            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            for (std::size_t j = t; j < n; ++j) a(t, j) += a(bad, j);
        }
        out.push_back(abs(a(t, t)));
    }
    return out;
}

std::optional<ZMatrix> solve_integral(const ZMatrix& b, const ZMatrix& y) {
    if (b.rows() != y.rows()) throw std::invalid_argument("solve_integral: shape mismatch");
    const std::size_t n = b.cols(), k = y.cols();
    Matrix<mpq_class> aug(b.rows(), n + k);
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = b(i, j);
        for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = y(i, j);
    }
    auto piv = rref(aug, n);
    if (piv.size() != n) throw std::invalid_argument("solve_integral: basis not of full column rank");
    for (std::size_t i = n; i < aug.rows(); ++i)
        for (std::size_t j = 0; j < k; ++j)
            if (aug(i, n + j) != 0) return std::nullopt;
    ZMatrix x(n, k);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (aug(i, n + j).get_den() != 1) return std::nullopt;
            x(i, j) = aug(i, n + j).get_num();
        }
    return x;
}

bool is_saturated(const ZMatrix& basis) {
    auto d = smith_invariants(basis);
    if (d.size() != basis.cols()) return false;
    return std::all_of(d.begin(), d.end(), [](const mpz_class& x) { return x == 1; });
}

// ---- modular ----

const std::array<ModPrime, 4>& mod_primes() {
    static const std::array<ModPrime, 4> primes{{{2147483629u, 1518275076u},
                                                 {2147483549u, 895500278u},
                                                 {2147483497u, 415680079u},
                                                 {2147483489u, 625866212u}}};
    return primes;
}

std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p) {
    return static_cast<std::uint32_t>(mpz_fdiv_ui(z.get_mpz_t(), p));
}

std::uint32_t reduce_mod(const GaussianInt& z, const ModPrime& pr) {
    const std::uint64_t re = reduce_mod(z.re(), pr.p), im = reduce_mod(z.im(), pr.p);
    return static_cast<std::uint32_t>((re + im * pr.sqrt_m1) % pr.p);
}

ModMatrix reduce_mod(const GiMatrix& a, const ModPrime& pr) {
    ModMatrix m(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = reduce_mod(a(i, j), pr);
    return m;
}

namespace {

template <std::uint32_t P>
struct FixedMod {
    static constexpr std::uint32_t p() { return P; }
    static std::uint64_t red(std::uint64_t x) { return x % P; }
};

struct RuntimeMod {
    std::uint32_t q;
    std::uint32_t p() const { return q; }
    std::uint64_t red(std::uint64_t x) const { return x % q; }
};

template <class M>
std::uint32_t inv_mod(const M& mod, std::uint32_t a) {
    std::uint64_t r = 1, b = a, e = mod.p() - 2;
    while (e) {
        if (e & 1) r = mod.red(r * b);
        b = mod.red(b * b);
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

// Row echelon form; full = true clears above pivots as well.
template <class M>
std::vector<std::size_t> echelon(const M& mod, ModMatrix& a, bool full) {
    const std::size_t m = a.rows(), n = a.cols();
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && a(p, c) == 0) ++p;
        if (p == m) continue;
        swap_rows(a, r, p);
        std::uint32_t* pr = a.row(r);
        const std::uint64_t inv = inv_mod(mod, pr[c]);
        for (std::size_t j = c; j < n; ++j) pr[j] = static_cast<std::uint32_t>(mod.red(pr[j] * inv));
        for (std::size_t i = full ? 0 : r + 1; i < m; ++i) {
            std::uint32_t* ri = a.row(i);
            if (i == r || ri[c] == 0) continue;
            const std::uint64_t f = mod.p() - ri[c];
            for (std::size_t j = c; j < n; ++j) ri[j] = static_cast<std::uint32_t>(mod.red(ri[j] + f * pr[j]));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class M>
ModMatrix mul_impl(const M& mod, const ModMatrix& a, const ModMatrix& b) {
    ModMatrix c(a.rows(), b.cols());
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t x = a(i, k);
            if (x == 0) continue;
            const std::uint32_t* bk = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] = mod.red(acc[j] + x * bk[j]);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<std::uint32_t>(acc[j]);
    }
    return c;
}

template <class F>
auto dispatch(std::uint32_t p, F&& f) {
    const auto& ps = mod_primes();
    if (p == ps[0].p) return f(FixedMod<2147483629u>{});
    if (p == ps[1].p) return f(FixedMod<2147483549u>{});
    if (p == ps[2].p) return f(FixedMod<2147483497u>{});
    if (p == ps[3].p) return f(FixedMod<2147483489u>{});
    return f(RuntimeMod{p});
}

}  // namespace

std::size_t rank_mod(ModMatrix a, const ModPrime& pr) {
    return dispatch(pr.p, [&](const auto& mod) { return echelon(mod, a, false).size(); });
}

ModMatrix kernel_mod(ModMatrix a, const ModPrime& pr) {
    const std::size_t n = a.cols();
    auto piv = dispatch(pr.p, [&](const auto& mod) { return echelon(mod, a, true); });
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    ModMatrix k(n, n - piv.size());
    std::size_t col = 0;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        k(f, col) = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) k(piv[r], col) = a(r, f) == 0 ? 0 : pr.p - a(r, f);
        ++col;
    }
    return k;
}

ModMatrix mul_mod(const ModMatrix& a, const ModMatrix& b, const ModPrime& pr) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul_mod: shape mismatch");
    return dispatch(pr.p, [&](const auto& mod) { return mul_impl(mod, a, b); });
}

void axpy_mod(ModMatrix& a, const ModMatrix& b, int s, const ModPrime& pr) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("axpy_mod: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::uint64_t x = a(i, j), y = b(i, j);
            a(i, j) = static_cast<std::uint32_t>(s > 0 ? (x + y) % pr.p : (x + pr.p - y) % pr.p);
        }
}

}  // namespace picard
