#include "picard/group.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace picard {

const char* gen_symbol(Gen g) {
    switch (g) {
    case Gen::Eps: return "e";
    case Gen::W: return "w";
    case Gen::Sigma: return "s";
    case Gen::SigmaCheck: return "sc";
    case Gen::Tau: return "t";
    case Gen::Xi: return "x";
    }
    return "?";
}

namespace {

GMat3 make(std::initializer_list<std::initializer_list<GaussianInt>> rows) {
    GMat3 m;
    int i = 0;
    for (const auto& r : rows) {
        int j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

}  // namespace

GMat3 generator_matrix(Gen g) {
    const GaussianInt I(0, 1);
    const GaussianInt one_i(1, 1);
    switch (g) {
    case Gen::Eps: return make({{I, 0, 0}, {0, -1, 0}, {0, 0, I}});
    case Gen::W: return make({{0, 0, -1}, {0, 1, 0}, {1, 0, 0}});
    case Gen::Sigma: return make({{1, one_i, I}, {0, 1, one_i}, {0, 0, 1}});
    case Gen::SigmaCheck: return make({{1, I * one_i, I}, {0, 1, -(I * one_i)}, {0, 0, 1}});
    case Gen::Tau: return make({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    case Gen::Xi:
        return make({{1, GaussianInt(-1, -1), I},
                     {GaussianInt(1, -1), -1, 0},
                     {GaussianInt(1, -1), GaussianInt(-1, -1), I}});
    }
    throw std::logic_error("unknown generator");
}

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters) push(l);
}

Word::Word(Gen g, int exp) { push({g, exp}); }

void Word::push(Letter l) {
    if (l.exp == 0) return;
    if (!letters_.empty() && letters_.back().gen == l.gen) {
        letters_.back().exp += l.exp;
        if (letters_.back().exp == 0) letters_.pop_back();
        return;
    }
    letters_.push_back(l);
}

Word Word::parse(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    Word w;
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        int exp = 1;
        auto caret = tok.find('^');
        if (caret != std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            std::size_t used = 0;
            try {
                exp = std::stoi(e, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("bad exponent in word token '" + tok + "'");
            }
            if (used != e.size()) throw std::invalid_argument("bad exponent in word token '" + tok + "'");
        }
        Gen g;
        if (name == "e") g = Gen::Eps;
        else if (name == "w") g = Gen::W;
        else if (name == "s") g = Gen::Sigma;
        else if (name == "sc") g = Gen::SigmaCheck;
        else if (name == "t") g = Gen::Tau;
        else if (name == "x") g = Gen::Xi;
        else throw std::invalid_argument("unknown generator '" + name + "' in word '" + text + "'");
        w.push({g, exp});
    }
    return w;
}

std::string Word::str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        s += gen_symbol(l.gen);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

Word Word::inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push({it->gen, -it->exp});
    return w;
}

Word& Word::operator*=(const Word& o) {
    for (const auto& l : o.letters_) push(l);
    return *this;
}

GMat3 inverse(const GMat3& m) {
    GaussianInt d = m.det();
    if (!d.is_unit()) throw std::domain_error("matrix is not invertible over Z[i]");
    GMat3 adj = m.adjugate();
    GaussianInt dinv = d.conj();  // d is a unit
    for (auto& row : adj.a)
        for (auto& x : row) x *= dinv;
    return adj;
}

GMat3 power(const GMat3& m, long k) {
    GMat3 base = k < 0 ? inverse(m) : m;
    unsigned long e = k < 0 ? static_cast<unsigned long>(-k) : static_cast<unsigned long>(k);
    GMat3 r = GMat3::identity();
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

GMat3 eval_word(const Word& w) {
    GMat3 r = GMat3::identity();
    for (const auto& l : w.letters()) r = r * power(generator_matrix(l.gen), l.exp);
    return r;
}

bool is_member(const GMat3& m) {
    if (m.det() != GaussianInt(1)) return false;
    return m.conj_transpose() * form_matrix() * m == form_matrix();
}

GroupElement::GroupElement(GMat3 m) : m_(std::move(m)) {
    if (!is_member(m_)) throw std::invalid_argument("matrix is not in SU(2,1;Z[i]): " + m_.str());
}

FiniteGroup::FiniteGroup(std::vector<GMat3> elements, std::vector<GMat3> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (std::size_t k = 0; k < elements_.size(); ++k) index_.emplace(elements_[k], k);
}

std::size_t FiniteGroup::index_of(const GMat3& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::out_of_range("element not in group");
    return it->second;
}

FiniteGroup close_subgroup(const std::vector<GMat3>& gens, std::size_t cap) {
    if (cap < 1) throw std::invalid_argument("cap must be positive");
    std::set<GMat3> seen{GMat3::identity()};
    std::deque<GMat3> todo{GMat3::identity()};
    while (!todo.empty()) {
        GMat3 x = std::move(todo.front());
        todo.pop_front();
        for (const auto& g : gens) {
            GMat3 y = x * g;
            if (seen.insert(y).second) {
                if (seen.size() > cap) throw std::runtime_error("not finite within cap");
                todo.push_back(std::move(y));
            }
        }
    }
    return FiniteGroup({seen.begin(), seen.end()}, gens);
}

FiniteGroup close_subgroup(const std::vector<Word>& gens, std::size_t cap) {
    std::vector<GMat3> ms;
    for (const auto& w : gens) ms.push_back(eval_word(w));
    return close_subgroup(ms, cap);
}

std::size_t element_order(const GMat3& m, std::size_t cap) {
    const GMat3 id = GMat3::identity();
    GMat3 x = m;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (x == id) return k;
        x = x * m;
    }
    throw std::runtime_error("element order exceeds cap");
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t n) {
    std::vector<std::size_t> ps;
    for (std::size_t p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

std::size_t ilog(std::size_t n, std::size_t p) {
    std::size_t k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

std::vector<std::size_t> invariants_from_orders(const std::vector<std::size_t>& orders) {
    const std::size_t n = orders.size();
    // per prime, exponents of cyclic p-factors, largest first
    std::vector<std::vector<std::size_t>> parts;
    for (std::size_t p : prime_factors(n)) {
        std::vector<std::size_t> logc{0};
        for (std::size_t pk = p;; pk *= p) {
            std::size_t c = std::count_if(orders.begin(), orders.end(),
                                          [&](std::size_t o) { return pk % o == 0; });
            logc.push_back(ilog(c, p));
            if (logc.back() == logc[logc.size() - 2]) break;
        }
        // a[k] = number of factors with exponent >= k
        std::vector<std::size_t> pows;
        for (std::size_t k = logc.size() - 1; k >= 1; --k) {
            std::size_t ge = logc[k] - logc[k - 1];
            std::size_t ge_next = k + 1 < logc.size() ? logc[k + 1] - logc[k] : 0;
            std::size_t pk = 1;
            for (std::size_t t = 0; t < k; ++t) pk *= p;
            for (std::size_t t = 0; t < ge - ge_next; ++t) pows.push_back(pk);
        }
        std::sort(pows.rbegin(), pows.rend());
        parts.push_back(pows);
    }
    std::size_t len = 0;
    for (const auto& v : parts) len = std::max(len, v.size());
    std::vector<std::size_t> inv(len, 1);
    for (const auto& v : parts)
        for (std::size_t j = 0; j < v.size(); ++j) inv[j] *= v[j];
    std::reverse(inv.begin(), inv.end());
    return inv;
}

}  // namespace

std::vector<std::size_t> abelian_invariant_factors(const std::vector<GMat3>& elements) {
    std::vector<std::size_t> orders;
    for (const auto& x : elements) orders.push_back(element_order(x));
    return invariants_from_orders(orders);
}

GroupInvariants group_invariants(const FiniteGroup& g) {
    GroupInvariants r;
    const auto& el = g.elements();
    const std::size_t n = el.size();
    r.order = n;

    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) mul[a][b] = g.index_of(el[a] * el[b]);
    const std::size_t e = g.index_of(GMat3::identity());

    std::vector<std::size_t> ord(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t k = 1, x = a;
        while (x != e) {
            x = mul[x][a];
            ++k;
        }
        ord[a] = k;
        r.exponent = std::lcm(r.exponent, k);
    }

    auto commute = [&](std::size_t a, std::size_t b) { return mul[a][b] == mul[b][a]; };
    std::vector<std::size_t> center_orders;
    for (std::size_t a = 0; a < n; ++a) {
        bool central = true;
        for (std::size_t b = 0; b < n && central; ++b) central = commute(a, b);
        if (central) center_orders.push_back(ord[a]);
        else r.abelian = false;
    }
    r.center = invariants_from_orders(center_orders);
    if (r.abelian) r.abelian_invariants = r.center;

    if (n > 64) throw std::runtime_error("elementary abelian search limited to order <= 64");
    std::vector<std::size_t> inv_idx;
    for (std::size_t a = 0; a < n; ++a)
        if (ord[a] == 2) inv_idx.push_back(a);

    using Mask = std::uint64_t;
    auto bit = [](std::size_t a) { return Mask(1) << a; };
    std::set<Mask> subgroups;
    std::deque<Mask> todo{bit(e)};
    subgroups.insert(bit(e));
    std::set<Mask> maximal;
    while (!todo.empty()) {
        Mask s = todo.front();
        todo.pop_front();
        bool extended = false;
        for (std::size_t t : inv_idx) {
            if (s & bit(t)) continue;
            bool ok = true;
            for (std::size_t a = 0; a < n && ok; ++a)
                if (s & bit(a)) ok = commute(a, t);
            if (!ok) continue;
            Mask s2 = s;
            for (std::size_t a = 0; a < n; ++a)
                if (s & bit(a)) s2 |= bit(mul[a][t]);
            extended = true;
            if (subgroups.insert(s2).second) todo.push_back(s2);
        }
        if (!extended && s != bit(e)) maximal.insert(s);
    }
    std::vector<std::size_t> inverse_of(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (mul[a][b] == e) inverse_of[a] = b;
    std::set<Mask> classes;
    for (Mask s : maximal) {
        Mask best = s;
        for (std::size_t x = 0; x < n; ++x) {
            Mask c = 0;
            for (std::size_t a = 0; a < n; ++a)
                if (s & bit(a)) c |= bit(mul[mul[x][a]][inverse_of[x]]);
            best = std::min(best, c);
        }
        classes.insert(best);
    }
    r.max_elem_abelian_classes = classes.size();
    return r;
}

}  // namespace picard
