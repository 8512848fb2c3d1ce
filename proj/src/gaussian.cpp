#include "picard/gaussian.hpp"

#include <sstream>
#include <stdexcept>

namespace picard {

GaussianInt& GaussianInt::operator+=(const GaussianInt& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator-=(const GaussianInt& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianInt& GaussianInt::operator*=(const GaussianInt& o) {
    mpz_class r = re_ * o.re_ - im_ * o.im_;
    mpz_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianInt::str() const {
    std::ostringstream os;
    if (im_ == 0) {
        os << re_;
    } else if (re_ == 0) {
        if (im_ == 1) os << "i";
        else if (im_ == -1) os << "-i";
        else os << im_ << "i";
    } else {
        os << re_ << (im_ > 0 ? "+" : "-");
        mpz_class a = abs(im_);
        if (a != 1) os << a;
        os << "i";
    }
    return os.str();
}

namespace {

// nearest integer to x/n, n > 0, halves rounded up
mpz_class round_div(const mpz_class& x, const mpz_class& n) {
    mpz_class t = 2 * x + n;
    mpz_class d = 2 * n;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), t.get_mpz_t(), d.get_mpz_t());
    return q;
}

}  // namespace

std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
    GaussianInt num = a * b.conj();
    mpz_class n = b.norm();
    GaussianInt q(round_div(num.re(), n), round_div(num.im(), n));
    return {q, a - q * b};
}

std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b) {
    if (b.is_zero()) throw std::domain_error("division by zero in Z[i]");
    GaussianInt num = a * b.conj();
    mpz_class n = b.norm();
    if (!mpz_divisible_p(num.re().get_mpz_t(), n.get_mpz_t()) ||
        !mpz_divisible_p(num.im().get_mpz_t(), n.get_mpz_t()))
        return std::nullopt;
    mpz_class r = num.re() / n, i = num.im() / n;
    return GaussianInt(r, i);
}

GaussianInt gcd(GaussianInt a, GaussianInt b) {
    while (!b.is_zero()) {
        GaussianInt r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GaussianInt unit_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
    }
}

GaussianInt GaussianRat::to_int() const {
    if (!is_integral()) throw std::domain_error("not a Gaussian integer: " + str());
    return {re_.get_num(), im_.get_num()};
}

GaussianRat GaussianRat::inverse() const {
    mpq_class n = norm();
    if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(i)");
    return {re_ / n, -im_ / n};
}

GaussianRat& GaussianRat::operator+=(const GaussianRat& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRat& GaussianRat::operator-=(const GaussianRat& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRat& GaussianRat::operator*=(const GaussianRat& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRat& GaussianRat::operator/=(const GaussianRat& o) { return *this *= o.inverse(); }

std::string GaussianRat::str() const {
    std::ostringstream os;
    os << "(" << re_ << ")+(" << im_ << ")i";
    return os.str();
}

GMat3 GMat3::identity() {
    GMat3 m;
    for (int k = 0; k < 3; ++k) m.a[k][k] = 1;
    return m;
}

GMat3 GMat3::from_columns(const GVec3& c0, const GVec3& c1, const GVec3& c2) {
    GMat3 m;
    for (int k = 0; k < 3; ++k) {
        m.a[k][0] = c0[k];
        m.a[k][1] = c1[k];
        m.a[k][2] = c2[k];
    }
    return m;
}

GaussianInt GMat3::det() const {
    const auto& m = a;
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

GMat3 GMat3::adjugate() const {
    GMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i1 = (j + 1) % 3, i2 = (j + 2) % 3;
            int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
            r.a[i][j] = a[i1][j1] * a[i2][j2] - a[i1][j2] * a[i2][j1];
        }
    return r;
}

GMat3 GMat3::conj_transpose() const {
    GMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i].conj();
    return r;
}

GMat3 GMat3::transpose() const {
    GMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.a[i][j] = a[j][i];
    return r;
}

GMat3 operator*(const GMat3& x, const GMat3& y) {
    GMat3 r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            GaussianInt s;
            for (int k = 0; k < 3; ++k) s += x.a[i][k] * y.a[k][j];
            r.a[i][j] = std::move(s);
        }
    return r;
}

GVec3 operator*(const GMat3& x, const GVec3& v) {
    GVec3 r;
    for (int i = 0; i < 3; ++i) {
        GaussianInt s;
        for (int k = 0; k < 3; ++k) s += x.a[i][k] * v[k];
        r[i] = std::move(s);
    }
    return r;
}

bool operator<(const GMat3& x, const GMat3& y) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (x.a[i][j] < y.a[i][j]) return true;
            if (y.a[i][j] < x.a[i][j]) return false;
        }
    return false;
}

std::string GMat3::str() const {
    std::string s = "[";
    for (int i = 0; i < 3; ++i) {
        s += i ? "; " : "";
        for (int j = 0; j < 3; ++j) s += (j ? ", " : "") + a[i][j].str();
    }
    return s + "]";
}

GVec3 scale(const GaussianInt& u, const GVec3& v) { return {u * v[0], u * v[1], u * v[2]}; }

bool is_zero(const GVec3& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

std::string to_string(const GVec3& v) {
    return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ")";
}

const GMat3& form_matrix() {
    static const GMat3 J = [] {
        GMat3 m;
        m(0, 2) = GaussianInt(0, 1);
        m(1, 1) = -1;
        m(2, 0) = GaussianInt(0, -1);
        return m;
    }();
    return J;
}

GaussianInt q_form(const GVec3& u, const GVec3& v) {
    const GaussianInt i(0, 1);
    return u[0].conj() * i * v[2] - u[1].conj() * v[1] - u[2].conj() * i * v[0];
}

bool is_isotropic(const GVec3& v) { return q_form(v, v).is_zero(); }

GaussianInt content(const GVec3& v) {
    if (is_zero(v)) throw std::invalid_argument("zero vector has no content");
    return gcd(gcd(v[0], v[1]), v[2]);
}

bool is_reduced(const GVec3& v) { return content(v).is_unit(); }

GaussianInt normalizing_unit(const GVec3& v) {
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        for (int k = 0; k < 4; ++k) {
            GaussianInt y = unit_power(k) * x;
            if (y.re() > 0 && y.im() >= 0) return unit_power(k);
        }
    }
    throw std::invalid_argument("cannot normalize the zero vector");
}

GVec3 unit_normalize(const GVec3& v) { return scale(normalizing_unit(v), v); }

}  // namespace picard
