#include "picard/config.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace picard {

namespace {

GaussianInt gi(long a, long b = 0) { return GaussianInt(a, b); }

mpz_class floor_q(const mpq_class& x) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

mpz_class ceil_q(const mpq_class& x) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

long q_norm(const GVec3& a, const GVec3& b) {
    mpz_class n = q_form(a, b).norm();
    return n.fits_slong_p() ? n.get_si() : std::numeric_limits<long>::max();
}

const GVec3 kE1{1, 0, 0};

}  // namespace

std::string tag_name(ConfigTag t) {
    switch (t) {
    case ConfigTag::J21: return "J2_1";
    case ConfigTag::J22: return "J2_2";
    case ConfigTag::J31: return "J3_1";
    case ConfigTag::J32: return "J3_2";
    case ConfigTag::J33: return "J3_3";
    case ConfigTag::J41: return "J4_1";
    case ConfigTag::J42: return "J4_2";
    case ConfigTag::J5: return "J5";
    case ConfigTag::J8: return "J8";
    case ConfigTag::NotBounded: return "NotBounded";
    case ConfigTag::Unrecognized: return "Unrecognized";
    }
    return "?";
}

ConfigTag tag_from_name(const std::string& s) {
    for (ConfigTag t : admissible_tags())
        if (tag_name(t) == s) return t;
    std::string u = s;
    if (u.size() > 1 && (u[0] == 'I' || u[0] == 'i')) u[0] = 'J';
    for (ConfigTag t : admissible_tags())
        if (tag_name(t) == u) return t;
    throw std::invalid_argument("unknown configuration tag '" + s + "'");
}

const std::vector<ConfigTag>& admissible_tags() {
    static const std::vector<ConfigTag> tags = {ConfigTag::J21, ConfigTag::J22, ConfigTag::J31,
                                                ConfigTag::J32, ConfigTag::J33, ConfigTag::J41,
                                                ConfigTag::J42, ConfigTag::J5,  ConfigTag::J8};
    return tags;
}

Configuration::Configuration(const std::vector<GVec3>& vectors) {
    for (const auto& x : vectors) {
        if (is_zero(x)) throw std::invalid_argument("zero vector in configuration");
        if (!is_isotropic(x)) throw std::invalid_argument("vector is not isotropic: " + to_string(x));
        if (!is_reduced(x)) throw std::invalid_argument("vector is not reduced: " + to_string(x));
        GVec3 n = unit_normalize(x);
        if (contains(n)) throw std::invalid_argument("repeated vector: " + to_string(x));
        v_.push_back(n);
    }
}

bool Configuration::contains(const GVec3& v) const {
    if (is_zero(v)) return false;
    GVec3 n = unit_normalize(v);
    return std::find(v_.begin(), v_.end(), n) != v_.end();
}

Configuration Configuration::with(const GVec3& v) const {
    std::vector<GVec3> vs = v_;
    vs.push_back(v);
    return Configuration(vs);
}

Configuration Configuration::transformed(const GMat3& g) const {
    std::vector<GVec3> vs;
    for (const auto& x : v_) vs.push_back(g * x);
    return Configuration(vs);
}

bool Configuration::same_set(const Configuration& o) const {
    if (size() != o.size()) return false;
    return std::all_of(v_.begin(), v_.end(), [&](const GVec3& x) { return o.contains(x); });
}

const Configuration& representative(ConfigTag t) {
    static const std::map<ConfigTag, Configuration> reps = [] {
        const GaussianInt I(0, 1), one_i(1, 1);
        const GVec3 e1{1, 0, 0}, e3{0, 0, 1};
        const GVec3 a{1, 0, 1};
        const GVec3 b{I, one_i, 1};      // sigma w e1
        const GVec3 c{one_i, one_i, 1};
        std::map<ConfigTag, Configuration> m;
        m.emplace(ConfigTag::J21, Configuration({e1, e3}));
        m.emplace(ConfigTag::J22, Configuration({e1, {I, one_i, one_i}}));
        m.emplace(ConfigTag::J31, Configuration({e1, e3, a}));
        m.emplace(ConfigTag::J32, Configuration({e1, e3, b}));
        m.emplace(ConfigTag::J33, Configuration({e1, e3, c}));
        m.emplace(ConfigTag::J41, Configuration({e1, e3, a, b}));
        m.emplace(ConfigTag::J42, Configuration({e1, e3, c, {-1, gi(-1, 1), one_i}}));
        m.emplace(ConfigTag::J5, Configuration({e1, e3, a, b, c}));
        m.emplace(ConfigTag::J8, Configuration({e1,
                                                e3,
                                                {-1, one_i, one_i},
                                                {gi(-1, 1), one_i, 1},
                                                {one_i, gi(1, -1), 1},
                                                {I, one_i, one_i},
                                                {gi(0, 2), 2, 1},
                                                {I, 2, 2}}));
        return m;
    }();
    auto it = reps.find(t);
    if (it == reps.end()) throw std::invalid_argument("no representative for " + tag_name(t));
    return it->second;
}

QMatrix q_matrix(const Configuration& c) {
    QMatrix m(c.size(), std::vector<long>(c.size(), 0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            if (i != j) m[i][j] = q_norm(c[i], c[j]);
    return m;
}

bool q_matrix_equivalent(const QMatrix& a, const QMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) return false;
    std::vector<std::size_t> perm(n);
    std::vector<bool> used(n, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == n) return true;
        for (std::size_t c = 0; c < n; ++c) {
            if (used[c]) continue;
            bool ok = a[i][i] == b[c][c];
            for (std::size_t j = 0; j < i && ok; ++j) ok = a[i][j] == b[c][perm[j]];
            if (!ok) continue;
            used[c] = true;
            perm[i] = c;
            if (rec(i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    return rec(0);
}

bool is_c_bounded(const Configuration& c, long bound) {
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (q_norm(c[i], c[j]) > bound) return false;
    return true;
}

int span_dimension(const Configuration& c) {
    if (c.size() == 0) return 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            for (std::size_t k = j + 1; k < c.size(); ++k)
                if (!GMat3::from_columns(c[i], c[j], c[k]).det().is_zero()) return 3;
    return c.size() >= 2 ? 2 : 1;  // distinct isotropic lines are independent
}

VectorReduction reduce_vector_pair(const GVec3& v0) {
    if (v0[2].is_zero()) throw std::invalid_argument("reduce_vector_pair needs q != 0");
    GVec3 v = v0;
    Word word;
    auto apply = [&](Gen g, long k) {
        if (k == 0) return;
        v = power(generator_matrix(g), k) * v;
        word = Word(g, static_cast<int>(k)) * word;
    };
    GaussianRat z = GaussianRat(v[1]) / GaussianRat(v[2]);
    // lattice (1+i)Z[i] = {a(1+i) + b(1-i)}: s = x + y = 2a, t = x - y = 2b
    mpq_class s = z.re() + z.im(), t = z.re() - z.im();
    mpz_class a = ceil_q((s - 1) / 2), b = ceil_q((t - 1) / 2);
    apply(Gen::Sigma, -a.get_si());
    apply(Gen::SigmaCheck, -b.get_si());

    z = GaussianRat(v[1]) / GaussianRat(v[2]);
    // e multiplies p/q by i
    for (int k = 0; k < 4; ++k) {
        GaussianRat zk = GaussianRat(unit_power(k)) * z;
        if (sgn(zk.re()) >= 0 && sgn(zk.im()) >= 0 && (k == 0 || !z.is_zero())) {
            apply(Gen::Eps, k);
            break;
        }
    }

    GaussianRat nq = GaussianRat(v[0]) / GaussianRat(v[2]);
    mpz_class m = floor_q(mpq_class(1, 2) - nq.re());
    apply(Gen::Tau, m.get_si());
    return {word, unit_normalize(v)};
}

Word word_to_origin(const GVec3& v0) {
    if (!is_reduced(v0)) throw std::invalid_argument("word_to_origin needs a reduced vector");
    GVec3 v = v0;
    Word word;
    const GMat3 w = generator_matrix(Gen::W);
    while (!v[2].is_zero()) {
        mpz_class before = v[2].norm();
        VectorReduction r = reduce_vector_pair(v);
        v = w * r.v;
        word = Word(Gen::W) * r.word * word;
        if (!v[2].is_zero() && v[2].norm() >= before)
            throw std::logic_error("descent did not shrink |q| for " + to_string(v0));
    }
    return word;
}

Word word_for_element(const GMat3& g) {
    if (!is_member(g)) throw std::invalid_argument("word_for_element: not a group element");
    Word w1 = word_to_origin(g.column(0));
    GMat3 h = eval_word(w1) * g;  // upper triangular with diagonal e^k
    int k = -1;
    for (int j = 0; j < 4; ++j)
        if (h(0, 0) == unit_power(j)) k = j;
    if (k < 0) throw std::logic_error("unexpected diagonal in word_for_element");
    GMat3 u = h * power(generator_matrix(Gen::Eps), -k);
    const mpz_class& x = u(0, 1).re();
    const mpz_class& y = u(0, 1).im();
    mpz_class a = (x + y) / 2, b = (y - x) / 2;
    Word nw = Word(Gen::Sigma, static_cast<int>(a.get_si())) * Word(Gen::SigmaCheck, static_cast<int>(b.get_si()));
    GMat3 rest = inverse(eval_word(nw)) * u;
    Word tail = Word(Gen::Tau, static_cast<int>(rest(0, 2).re().get_si())) * Word(Gen::Eps, k);
    Word result = w1.inverse() * nw * tail;
    if (eval_word(result) != g) throw std::logic_error("word_for_element failed for " + g.str());
    return result;
}

std::vector<GVec3> enumerate_extensions(const Configuration& c, long bound) {
    if (!c.contains(kE1)) throw std::invalid_argument("enumerate_extensions needs (1,0,0) in the configuration");
    const double slack = 1e-9;
    const double qmax = std::sqrt(double(bound));
    // |n| from some member u with q_u != 0:
    // |q_u||n| <= sqrt(bound) + |n_u||q| + |p_u||p|, |p| <= sqrt(2|n||q|)
    double nmax = -1;
    for (const auto& u : c.vectors()) {
        if (u[2].is_zero()) continue;
        double qu = std::sqrt(u[2].norm().get_d());
        double nu = std::sqrt(u[0].norm().get_d());
        double pu = std::sqrt(u[1].norm().get_d());
        double A = qu, B = pu * std::sqrt(2 * qmax), C = std::sqrt(double(bound)) + nu * qmax;
        double x = (B + std::sqrt(B * B + 4 * A * C)) / (2 * A);
        double cand = x * x;
        if (nmax < 0 || cand < nmax) nmax = cand;
    }
    if (nmax < 0) throw std::invalid_argument("enumerate_extensions needs a member with q != 0");
    const long Q = static_cast<long>(std::floor(qmax + slack));
    const long N = static_cast<long>(std::floor(nmax + slack)) + 1;

    std::set<GVec3> found;
    for (long qa = -Q; qa <= Q; ++qa)
        for (long qb = -Q; qb <= Q; ++qb) {
            if (qa * qa + qb * qb > bound || (qa == 0 && qb == 0)) continue;
            for (long na = -N; na <= N; ++na)
                for (long nb = -N; nb <= N; ++nb) {
                    if (double(na * na + nb * nb) > nmax * nmax + slack) continue;
                    // |p|^2 = 2 Im(n conj q)
                    long target = 2 * (nb * qa - na * qb);
                    if (target < 0) continue;
                    long R = static_cast<long>(std::sqrt(double(target))) + 1;
                    for (long pa = -R; pa <= R; ++pa) {
                        long rest = target - pa * pa;
                        if (rest < 0) continue;
                        long pb = static_cast<long>(std::llround(std::sqrt(double(rest))));
                        if (pb * pb != rest) continue;
                        for (long sgn_b : {pb, -pb}) {
                            GVec3 v{gi(na, nb), gi(pa, sgn_b), gi(qa, qb)};
                            if (!is_reduced(v)) continue;
                            GVec3 n = unit_normalize(v);
                            if (c.contains(n) || found.count(n)) continue;
                            bool ok = true;
                            for (const auto& u : c.vectors())
                                if (q_norm(u, n) > bound) {
                                    ok = false;
                                    break;
                                }
                            if (ok) found.insert(n);
                            if (pb == 0) break;
                        }
                    }
                }
        }
    return {found.begin(), found.end()};
}

std::vector<Configuration> bounded_supersets(const Configuration& base, long bound, std::size_t size,
                                             const Configuration* profile) {
    std::vector<Configuration> out;
    if (size < base.size()) return out;
    if (size == base.size()) {
        out.push_back(base);
        return out;
    }
    std::vector<GVec3> cand = enumerate_extensions(base, bound);
    const std::size_t nc = cand.size();
    std::vector<std::vector<long>> qq(nc, std::vector<long>(nc));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j) qq[i][j] = qq[j][i] = q_norm(cand[i], cand[j]);

    // per-row value multiplicity caps
    std::map<long, std::size_t> cap;
    if (profile) {
        for (const auto& row : q_matrix(*profile)) {
            std::map<long, std::size_t> cnt;
            for (long x : row) cnt[x]++;
            for (auto [x, n] : cnt) cap[x] = std::max(cap[x], n);
        }
    }
    std::vector<std::map<long, std::size_t>> base_cnt(nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (const auto& u : base.vectors()) base_cnt[i][q_norm(u, cand[i])]++;
    // base rows contribute too: value of base row b against candidate i
    std::vector<std::map<long, std::size_t>> base_rows(base.size());
    for (std::size_t b = 0; b < base.size(); ++b)
        for (std::size_t b2 = 0; b2 < base.size(); ++b2)
            base_rows[b][b2 == b ? 0 : q_norm(base[b], base[b2])]++;
    auto within = [&](const std::map<long, std::size_t>& cnt) {
        if (!profile) return true;
        for (auto [x, n] : cnt) {
            auto it = cap.find(x);
            if (it == cap.end() || n > it->second) return false;
        }
        return true;
    };
    if (profile) {
        for (const auto& r : base_rows)
            if (!within(r)) return out;
    }

    std::vector<std::size_t> chosen;
    std::vector<std::map<long, std::size_t>> row_cnt;  // for chosen candidates
    std::vector<std::map<long, std::size_t>> brow = base_rows;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (base.size() + chosen.size() == size) {
            std::vector<GVec3> vs = base.vectors();
            for (std::size_t k : chosen) vs.push_back(cand[k]);
            out.emplace_back(vs);
            return;
        }
        for (std::size_t i = start; i < nc; ++i) {
            bool ok = true;
            for (std::size_t k : chosen)
                if (qq[i][k] > bound) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            if (profile) {
                std::map<long, std::size_t> mine = base_cnt[i];
                mine[0]++;
                for (std::size_t k : chosen) mine[qq[i][k]]++;
                if (!within(mine)) continue;
                bool others = true;
                for (std::size_t t = 0; t < chosen.size() && others; ++t) {
                    auto m2 = row_cnt[t];
                    m2[qq[i][chosen[t]]]++;
                    others = within(m2);
                }
                for (std::size_t b = 0; b < base.size() && others; ++b) {
                    auto m2 = brow[b];
                    m2[q_norm(base[b], cand[i])]++;
                    others = within(m2);
                }
                if (!others) continue;
                for (std::size_t t = 0; t < chosen.size(); ++t) row_cnt[t][qq[i][chosen[t]]]++;
                for (std::size_t b = 0; b < base.size(); ++b) brow[b][q_norm(base[b], cand[i])]++;
                row_cnt.push_back(mine);
            }
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
            if (profile) {
                row_cnt.pop_back();
                for (std::size_t t = 0; t < chosen.size(); ++t) {
                    auto& m = row_cnt[t];
                    if (--m[qq[i][chosen[t]]] == 0) m.erase(qq[i][chosen[t]]);
                }
                for (std::size_t b = 0; b < base.size(); ++b) {
                    auto& m = brow[b];
                    long x = q_norm(base[b], cand[i]);
                    if (--m[x] == 0) m.erase(x);
                }
            }
        }
    };
    rec(0);
    return out;
}

namespace {

// Solve g from images of a spanning set; nullopt unless g is integral.
std::optional<GMat3> solve_on_basis(const std::vector<GVec3>& src, const std::vector<GVec3>& dst) {
    GMat3 N, T;
    GaussianInt denom;
    if (src.size() == 3) {
        N = GMat3::from_columns(src[0], src[1], src[2]);
        T = GMat3::from_columns(dst[0], dst[1], dst[2]);
        denom = N.det();
    } else {
        auto complement = [](const GVec3& a, const GVec3& b) {
            const GMat3& J = form_matrix();
            GVec3 ja = J * a, jb = J * b;
            GVec3 x{ja[1] * jb[2] - ja[2] * jb[1], ja[2] * jb[0] - ja[0] * jb[2], ja[0] * jb[1] - ja[1] * jb[0]};
            return GVec3{x[0].conj(), x[1].conj(), x[2].conj()};
        };
        GVec3 sc = complement(src[0], src[1]);
        GVec3 xc = complement(dst[0], dst[1]);
        N = GMat3::from_columns(src[0], src[1], sc);
        GaussianInt dn = N.det();
        GaussianInt dm = GMat3::from_columns(dst[0], dst[1], xc).det();
        if (dn.is_zero() || dm.is_zero()) return std::nullopt;
        // columns t_a dm, t_b dm, x_c dn over dn dm
        T = GMat3::from_columns(scale(dm, dst[0]), scale(dm, dst[1]), scale(dn, xc));
        denom = dn * dm;
    }
    if (denom.is_zero()) return std::nullopt;
    GMat3 num = T * N.adjugate();
    GMat3 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            auto q = exact_div(num(i, j), denom);
            if (!q) return std::nullopt;
            g(i, j) = *q;
        }
    return g;
}

}  // namespace

std::vector<GMat3> set_maps(const Configuration& from, const Configuration& to, bool first_only) {
    std::vector<GMat3> result;
    const std::size_t k = from.size();
    if (k != to.size() || k < 2) return result;
    if (span_dimension(from) != span_dimension(to)) return result;

    std::vector<std::size_t> basis;
    const int dim = span_dimension(from);
    if (dim == 3) {
        for (std::size_t i = 0; i < k && basis.empty(); ++i)
            for (std::size_t j = i + 1; j < k && basis.empty(); ++j)
                for (std::size_t l = j + 1; l < k && basis.empty(); ++l)
                    if (!GMat3::from_columns(from[i], from[j], from[l]).det().is_zero()) basis = {i, j, l};
    } else {
        basis = {0, 1};
    }

    std::vector<std::vector<GaussianInt>> qs(k, std::vector<GaussianInt>(k)), qt = qs;
    std::vector<std::vector<mpz_class>> ns(k, std::vector<mpz_class>(k)), nt = ns;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            qs[i][j] = q_form(from[i], from[j]);
            qt[i][j] = q_form(to[i], to[j]);
            ns[i][j] = qs[i][j].norm();
            nt[i][j] = qt[i][j].norm();
        }

    std::set<GMat3> seen;
    std::vector<std::size_t> perm(k);
    std::vector<bool> used(k, false);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == k) {
            for (int u0 = 0; u0 < 4; ++u0) {
                std::vector<GaussianInt> u(k);
                u[0] = unit_power(u0);
                bool ok = true;
                for (std::size_t j = 1; j < k && ok; ++j) {
                    auto q = exact_div(qs[0][j], u[0].conj() * qt[perm[0]][perm[j]]);
                    ok = q && q->is_unit();
                    if (ok) u[j] = *q;
                }
                for (std::size_t a = 0; a < k && ok; ++a)
                    for (std::size_t b = a + 1; b < k && ok; ++b)
                        ok = qs[a][b] == u[a].conj() * u[b] * qt[perm[a]][perm[b]];
                if (!ok) continue;
                std::vector<GVec3> src, dst;
                for (std::size_t b : basis) {
                    src.push_back(from[b]);
                    dst.push_back(scale(u[b], to[perm[b]]));
                }
                auto g = solve_on_basis(src, dst);
                if (!g || !is_member(*g)) continue;
                bool maps = true;
                for (std::size_t a = 0; a < k && maps; ++a) maps = (*g * from[a]) == scale(u[a], to[perm[a]]);
                if (!maps) continue;
                if (seen.insert(*g).second) {
                    result.push_back(*g);
                    if (first_only) return true;
                }
            }
            return false;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = ns[i][j] == nt[c][perm[j]];
            if (!ok) continue;
            used[c] = true;
            perm[i] = c;
            if (rec(i + 1)) return true;
            used[c] = false;
        }
        return false;
    };
    rec(0);
    return result;
}

std::optional<GMat3> conjugator(const Configuration& from, const Configuration& to) {
    auto maps = set_maps(from, to, true);
    if (maps.empty()) return std::nullopt;
    return maps.front();
}

FiniteGroup stabilizer(const Configuration& c) {
    if (c.size() < 2) throw std::invalid_argument("stabilizer needs at least two vectors");
    auto maps = set_maps(c, c, false);
    FiniteGroup g(maps, maps);
    // the solver must have found a group
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            if (!g.contains(a * b)) throw std::logic_error("stabilizer search is not closed");
    return g;
}

namespace {

struct Fingerprint {
    std::vector<long> entries;
    int span;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const Configuration& c) {
    Fingerprint f;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) f.entries.push_back(q_norm(c[i], c[j]));
    std::sort(f.entries.begin(), f.entries.end());
    f.span = span_dimension(c);
    return f;
}

}  // namespace

Classification classify(const Configuration& c) {
    if (c.size() < 2) throw std::invalid_argument("classify needs at least two vectors");
    Fingerprint f = fingerprint(c);
    for (ConfigTag t : admissible_tags()) {
        if (!(fingerprint(representative(t)) == f)) continue;
        if (auto g = conjugator(c, representative(t))) return {t, g};
        return {ConfigTag::Unrecognized, std::nullopt};
    }
    if (is_c_bounded(c, 2)) return {ConfigTag::Unrecognized, std::nullopt};
    return {ConfigTag::NotBounded, std::nullopt};
}

Incidence incidence_counts(ConfigTag row, ConfigTag col) {
    const Configuration& R = representative(row);
    const Configuration& C = representative(col);
    Incidence inc;
    if (R.size() > C.size()) {
        long bound = row == ConfigTag::J8 ? 4 : 2;
        for (const auto& s : bounded_supersets(C, bound, R.size(), &R))
            if (classify(s).tag == row) ++inc.below;
    } else if (R.size() < C.size()) {
        const std::size_t n = C.size(), m = R.size();
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + m, true);
        do {
            std::vector<GVec3> vs;
            for (std::size_t k = 0; k < n; ++k)
                if (pick[k]) vs.push_back(C[k]);
            if (classify(Configuration(vs)).tag == row) ++inc.above;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return inc;
}

std::vector<GVec3> pair_normal_forms(long bound) {
    // A reduced form has |p|^2 <= |q|^2 and |n|^2 <= |q|^2 / 2, so every
    // entry has norm <= bound.
    const long R = static_cast<long>(std::floor(std::sqrt(double(bound)) + 1e-9));
    std::vector<GaussianInt> box;
    for (long a = -R; a <= R; ++a)
        for (long b = -R; b <= R; ++b)
            if (a * a + b * b <= bound) box.push_back(gi(a, b));
    std::set<GVec3> out;
    for (const auto& q : box) {
        if (q.is_zero()) continue;
        for (const auto& n : box)
            for (const auto& p : box) {
                GVec3 v{n, p, q};
                if (!is_isotropic(v) || !is_reduced(v)) continue;
                out.insert(reduce_vector_pair(v).v);
            }
    }
    return {out.begin(), out.end()};
}

BoundedClosure bounded_closure(long bound) {
    BoundedClosure bc;
    bc.closed = true;
    std::vector<ConfigTag> queue;
    auto visit = [&](ConfigTag t) {
        if (t == ConfigTag::Unrecognized || t == ConfigTag::NotBounded) {
            bc.closed = false;
            return;
        }
        if (bc.classes.insert(t).second) queue.push_back(t);
    };
    for (const auto& v : pair_normal_forms(bound)) visit(classify(Configuration({kE1, v})).tag);
    for (std::size_t k = 0; k < queue.size(); ++k) {
        ClosureStep step{queue[k], 0, {}};
        const Configuration& c = representative(queue[k]);
        auto ext = enumerate_extensions(c, bound);
        step.extensions = ext.size();
        for (const auto& v : ext) {
            ConfigTag t = classify(c.with(v)).tag;
            ++step.reached[t];
            visit(t);
        }
        bc.steps.push_back(std::move(step));
    }
    return bc;
}

}  // namespace picard
