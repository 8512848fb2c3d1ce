#include "picard/spine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace picard {

namespace {

using CMat = std::array<std::array<cplx, 3>, 3>;

cplx to_c(const GaussianInt& z) { return {z.re().get_d(), z.im().get_d()}; }

const cplx I1{0, 1};

CMat base_frame(const Point& z) {
    // N0(beta, r) diag(y, 1, 1/y)
    const cplx b = z.beta;
    const double nb = std::norm(b);
    CMat u{};
    u[0] = {1.0, b, cplx(z.r, nb / 2)};
    u[1] = {0.0, 1.0, I1 * std::conj(b)};
    u[2] = {0.0, 0.0, 1.0};
    const double d[3] = {z.y, 1.0, 1.0 / z.y};
    for (auto& row : u)
        for (int j = 0; j < 3; ++j) row[j] *= d[j];
    return u;
}

}  // namespace

double f_exhaustion(const GVec3& v, const Point& z) {
    const cplx n = to_c(v[0]), p = to_c(v[1]), q = to_c(v[2]);
    const cplx b = z.beta;
    const double y = z.y, y2 = y * y;
    const cplx a = n - b * p + (I1 * (std::norm(b) / 2) - z.r) * q;
    const cplx c = p - I1 * std::conj(b) * q;
    return y / std::sqrt(std::norm(a) + y2 * std::norm(c) + y2 * y2 * std::norm(q));
}

Point generator_action(Gen g, const Point& z, long k) {
    Point out = z;
    const double x = z.beta.real(), t = z.beta.imag();
    switch (g) {
    case Gen::Sigma:
        out.beta += double(k) * cplx(1, 1);
        out.r += double(k) * (t - x);
        return out;
    case Gen::SigmaCheck:
        out.beta += double(k) * cplx(-1, 1);
        out.r -= double(k) * (x + t);
        return out;
    case Gen::Tau:
        out.r += double(k);
        return out;
    case Gen::Eps: {
        cplx rot = 1;
        for (long j = 0; j < ((k % 4) + 4) % 4; ++j) rot *= -I1;
        out.beta *= rot;
        return out;
    }
    default: return act(power(generator_matrix(g), k), z);
    }
}

Point act(const GMat3& g, const Point& z) {
    CMat f = base_frame(z), m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) m[i][j] += to_c(g(i, k)) * f[k][j];
    CMat h{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) h[i][j] += m[i][k] * std::conj(m[j][k]);
    // H = U D U*, U unit upper triangular
    const double d3 = h[2][2].real();
    const cplx u23 = h[1][2] / d3, u13 = h[0][2] / d3;
    const double d2 = h[1][1].real() - std::norm(u23) * d3;
    const cplx u12 = (h[0][1] - u13 * d3 * std::conj(u23)) / d2;
    const double d1 = h[0][0].real() - std::norm(u12) * d2 - std::norm(u13) * d3;
    return {std::sqrt(d1), u12, u13.real()};
}

bool in_reduced_square(cplx beta, double tol) {
    return std::abs(beta.real()) + std::abs(beta.imag() - 0.5) <= 0.5 + tol;
}

PointReduction reduce_point(const Point& z0) {
    PointReduction out{Word(), z0};
    auto apply = [&](Gen g, long k) {
        if (k == 0) return;
        out.z = generator_action(g, out.z, k);
        out.word = Word(g, static_cast<int>(k)) * out.word;
    };
    const double s = z0.beta.real() + z0.beta.imag();
    const double t = z0.beta.imag() - z0.beta.real();
    apply(Gen::Sigma, -static_cast<long>(std::ceil((s - 1) / 2)));
    apply(Gen::SigmaCheck, -static_cast<long>(std::ceil((t - 1) / 2)));
    for (int k = 0; k < 4; ++k) {
        cplx b = generator_action(Gen::Eps, out.z, k).beta;
        if (b.imag() >= std::abs(b.real()) - 1e-15) {
            apply(Gen::Eps, k);
            break;
        }
    }
    apply(Gen::Tau, static_cast<long>(std::floor(0.5 - out.z.r)));
    return out;
}

std::optional<double> e_surface_y2(const GVec3& v, cplx beta, double r) {
    if (v[2].is_zero()) throw std::invalid_argument("e_surface_y2 needs q != 0");
    const cplx n = to_c(v[0]), p = to_c(v[1]), q = to_c(v[2]);
    const double rad = 1.0 / std::norm(q) - std::pow(((n - beta * p) / q).real() - r, 2);
    if (rad < 0) return std::nullopt;
    const double y2 = -0.5 * std::norm(p / q - I1 * std::conj(beta)) + std::sqrt(rad);
    if (y2 <= 0) return std::nullopt;
    return y2;
}

FirstContact first_contact_pair(const GVec3& a, const GVec3& b) {
    GaussianInt qab = q_form(a, b);
    if (qab.is_zero()) throw std::invalid_argument("first_contact_pair: Q(v_P, v_Q) = 0");
    FirstContact fc;
    fc.value = 1.0 / std::sqrt(std::sqrt(qab.norm().get_d()));
    const GVec3 e1{1, 0, 0};
    const GVec3* other = nullptr;
    if (unit_normalize(a) == e1) other = &b;
    else if (unit_normalize(b) == e1) other = &a;
    if (other) {
        const cplx n = to_c((*other)[0]), p = to_c((*other)[1]), q = to_c((*other)[2]);
        fc.point = Point{1.0 / std::sqrt(std::abs(q)), I1 * std::conj(p / q), (n / q).real()};
    }
    return fc;
}

ParabolicSearch max_parabolic(const Point& z, double floor) {
    if (!(floor > 0)) throw std::invalid_argument("max_parabolic needs floor > 0");
    const double grow = 1 + 1e-9;
    const double y = z.y;
    const cplx b = z.beta;
    ParabolicSearch out;
    out.bounds.q_norm2_max = grow / (y * y * floor * floor);
    out.bounds.p_radius = grow / floor;
    out.bounds.n_radius = grow * y / floor;
    out.bounds.candidates = 0;

    const double lim = floor - kTieTolerance;
    std::set<GVec3> seen;
    const long Q = static_cast<long>(std::floor(std::sqrt(out.bounds.q_norm2_max)));
    for (long qa = -Q; qa <= Q; ++qa)
        for (long qb = -Q; qb <= Q; ++qb) {
            if (double(qa * qa + qb * qb) > out.bounds.q_norm2_max) continue;
            const cplx q{double(qa), double(qb)};
            const cplx pc = I1 * std::conj(b) * q;
            const double rp = out.bounds.p_radius;
            for (long pa = long(std::ceil(pc.real() - rp)); pa <= long(std::floor(pc.real() + rp)); ++pa)
                for (long pb = long(std::ceil(pc.imag() - rp)); pb <= long(std::floor(pc.imag() + rp)); ++pb) {
                    const cplx p{double(pa), double(pb)};
                    if (std::norm(p - pc) > rp * rp) continue;
                    const long p2 = pa * pa + pb * pb;
                    const cplx nc = b * p - (I1 * (std::norm(b) / 2) - z.r) * q;
                    const double rn = out.bounds.n_radius;
                    for (long na = long(std::ceil(nc.real() - rn)); na <= long(std::floor(nc.real() + rn)); ++na)
                        for (long nb = long(std::ceil(nc.imag() - rn)); nb <= long(std::floor(nc.imag() + rn)); ++nb) {
                            ++out.bounds.candidates;
                            if (p2 != 2 * (nb * qa - na * qb)) continue;
                            if (qa == 0 && qb == 0 && pa == 0 && pb == 0 && na == 0 && nb == 0) continue;
                            GVec3 v{GaussianInt(na, nb), GaussianInt(pa, pb), GaussianInt(qa, qb)};
                            const double f = f_exhaustion(v, z);
                            if (f < lim) continue;
                            if (!is_reduced(v)) continue;
                            GVec3 nv = unit_normalize(v);
                            if (!seen.insert(nv).second) continue;
                            out.witnesses.push_back({nv, f, std::abs(f - floor) <= kTieTolerance});
                        }
                }
        }
    std::sort(out.witnesses.begin(), out.witnesses.end(),
              [](const Witness& a, const Witness& c) { return a.value > c.value; });
    return out;
}

Point first_contact_point(ConfigTag t) {
    // y, Re beta, Im beta, r
    auto P = [](const char* y, const char* br, const char* bi, const char* r) {
        return Point{std::strtod(y, nullptr), cplx(std::strtod(br, nullptr), std::strtod(bi, nullptr)),
                     std::strtod(r, nullptr)};
    };
    switch (t) {
    case ConfigTag::J21: return P("1", "0", "0", "0");
    // (2^(-1/4), i, 1/2)
    case ConfigTag::J22: return P("0.840896415253714543031125476233214895", "0", "1", "0.5");
    // ((3/4)^(1/4), 0, 1/2)
    case ConfigTag::J31: return P("0.930604859102099598941218746983234088", "0", "0", "0.5");
    // (sqrt3/2, (1+i)/2, 0)
    case ConfigTag::J32: return P("0.866025403784438646763723170752936183", "0.5", "0.5", "0");
    // phi = (1+sqrt5)/2:
    // y = sqrt(phi^2 sqrt(phi) - 2)/sqrt2,
    // beta = (phi^2 - sqrt(phi) + i(1 - phi + sqrt(phi)))/2, r = (1 - phi + sqrt(phi))/2
    case ConfigTag::J33:
        return P("0.81553377513919103612099180694419168", "0.673007169617912941976082186314073313",
                 "0.326992830382087058023917813685926687", "0.326992830382087058023917813685926687");
    // y = sqrt(-3 + sqrt3 + sqrt2 + sqrt6)/2, beta = (1 + sqrt3 - sqrt2)/4 (1 + sqrt3 i), r = 1/2
    case ConfigTag::J41:
        return P("0.805567208978423854347290875790935118", "0.329459311298945561181439404324043572",
                 "0.570640266196424798832540566699995244", "0.5");
    // y = sqrt(phi - 1), beta = (3+i)/2 (1 - 1/sqrt5), r = 0
    case ConfigTag::J42:
        return P("0.78615137775742328606955858584295893", "0.829179606750063091077247899380617129",
                 "0.276393202250021030359082633126872376", "0");
    // y = sqrt(-1 + 2 sqrt3)/2, beta = (1+i)/2, r = 1/2
    case ConfigTag::J5: return P("0.784872858356331905821076783653318439", "0.5", "0.5", "0.5");
    // (1/sqrt2, i, 0)
    case ConfigTag::J8: return P("0.707106781186547524400844362104849039", "0", "1", "0");
    default: throw std::invalid_argument("no first-contact point for " + tag_name(t));
    }
}

Refinement refine_first_contact(ConfigTag t) {
    using Vec = Eigen::VectorXd;
    using Mat = Eigen::MatrixXd;
    std::vector<GVec3> others;
    for (const auto& v : representative(t).vectors())
        if (!(v == GVec3{1, 0, 0})) others.push_back(v);
    const int m = static_cast<int>(others.size());

    auto point = [](const Vec& x) { return Point{x[0], cplx(x[1], x[2]), x[3]}; };
    auto g = [&](const Vec& x) {
        Vec r(m);
        for (int k = 0; k < m; ++k) r[k] = f_exhaustion(others[k], point(x)) - x[0];
        return r;
    };
    auto jac = [&](const std::function<Vec(const Vec&)>& F, const Vec& x, int rows, double h) {
        Mat J(rows, x.size());
        for (int j = 0; j < x.size(); ++j) {
            Vec a = x, b = x;
            a[j] += h;
            b[j] -= h;
            J.col(j) = (F(a) - F(b)) / (2 * h);
        }
        return J;
    };

    Point z0 = first_contact_point(t);
    Vec x(4);
    x << z0.y, z0.beta.real(), z0.beta.imag(), z0.r;
    Refinement out{z0, 0, 0};

    if (m >= 4) {
        for (out.iterations = 0; out.iterations < 50; ++out.iterations) {
            Vec r = g(x);
            if (r.norm() < 1e-14) break;
            Mat J = jac(g, x, m, 1e-7);
            x -= J.colPivHouseholderQr().solve(r);
        }
        out.residual = g(x).norm();
    } else {
        // stationarity of y on {g = 0}: e_y = sum lambda_k grad g_k
        Vec ey = Vec::Zero(4);
        ey[0] = 1;
        Mat G0 = jac(g, x, m, 1e-7);
        Vec lambda = G0.transpose().colPivHouseholderQr().solve(ey);
        std::function<Vec(const Vec&)> F = [&](const Vec& u) {
            Vec xx = u.head(4), lam = u.tail(m);
            Mat G = jac(g, xx, m, 1e-6);
            Vec res(4 + m);
            res.head(4) = ey - G.transpose() * lam;
            res.tail(m) = g(xx);
            return res;
        };
        Vec u(4 + m);
        u << x, lambda;
        for (out.iterations = 0; out.iterations < 50; ++out.iterations) {
            Vec r = F(u);
            if (r.norm() < 1e-10) break;
            Mat J = jac(F, u, 4 + m, 1e-5);
            u -= J.colPivHouseholderQr().solve(r);
        }
        out.residual = F(u).norm();
        x = u.head(4);
    }
    out.z = point(x);
    return out;
}

AdmissibilityCheck verify_strong_admissibility(ConfigTag t, double margin) {
    AdmissibilityCheck c;
    c.tag = t;
    const Configuration& J = representative(t);
    const Point z = first_contact_point(t);
    double lo = 1e300, hi = -1e300;
    for (const auto& v : J.vectors()) {
        double f = f_exhaustion(v, z);
        lo = std::min(lo, f);
        hi = std::max(hi, f);
    }
    c.value = lo;
    c.spread = hi - lo;
    std::ostringstream detail;
    if (c.spread > kTieTolerance) {
        detail << "member values differ by " << c.spread;
        c.detail = detail.str();
        return c;
    }
    ParabolicSearch near = max_parabolic(z, c.value - margin);
    c.witnesses = near.witnesses;
    std::size_t members = 0;
    bool outsider = false;
    for (const auto& w : near.witnesses) {
        if (J.contains(w.v)) ++members;
        else {
            outsider = true;
            detail << "outsider " << to_string(w.v) << " at " << w.value << "; ";
        }
    }
    ParabolicSearch wide = max_parabolic(z, 0.75 * c.value);
    for (const auto& w : wide.witnesses)
        if (!J.contains(w.v)) {
            c.runner_up = w.value;
            break;
        }
    c.pass = !outsider && members == J.size();
    if (members != J.size()) detail << "found " << members << " of " << J.size() << " members";
    c.detail = detail.str();
    return c;
}

namespace {
// Below this the point lies under the ball of some other parabolic.
constexpr double kSpineHeightFloor = 0.66;
}  // namespace

SpineSampling sample_spine_cell(ConfigTag cell, std::size_t count, std::uint64_t seed) {
    if (cell != ConfigTag::J21 && cell != ConfigTag::J22)
        throw std::invalid_argument("spine sampling covers the two 3-cells J2_1 and J2_2");
    const GVec3 v = representative(cell)[1];
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    SpineSampling out;
    const long cap = static_cast<long>(count) * 400;
    while (out.samples.size() < count && out.attempts < cap) {
        ++out.attempts;
        cplx beta;
        double r;
        if (cell == ConfigTag::J21) {
            beta = cplx(1.1 * unit(rng), 1.1 * unit(rng));
            r = 0.5 * unit(rng);
        } else {
            beta = cplx(0.8 * unit(rng), 1.0 + 0.8 * unit(rng));
            r = 0.5 + 0.8 * unit(rng);
        }
        auto y2 = e_surface_y2(v, beta, r);
        if (!y2) continue;
        Point z{std::sqrt(*y2), beta, r};
        const double fy = z.y;
        if (fy < kSpineHeightFloor) continue;
        ParabolicSearch s = max_parabolic(z, fy * (1 - 1e-6));
        bool dominated = true;
        double best = fy;
        for (const auto& w : s.witnesses) {
            best = std::max(best, w.value);
            if (w.value > fy + kTieTolerance) dominated = false;
        }
        if (!dominated) continue;
        out.samples.push_back({z, best, cell});
    }
    return out;
}

SpineValue spine_value(const Point& z) {
    double floor = std::max({z.y, f_exhaustion(GVec3{0, 0, 1}, z), 0.6});
    for (;;) {
        ParabolicSearch s = max_parabolic(z, floor);
        if (!s.witnesses.empty()) {
            SpineValue out;
            out.value = s.witnesses.front().value;
            out.candidates = s.bounds.candidates;
            for (const auto& w : s.witnesses)
                if (w.value >= out.value - kTieTolerance) out.dominating.push_back(w);
            return out;
        }
        floor /= 2;
    }
}

}  // namespace picard
