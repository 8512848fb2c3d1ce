#pragma once

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace picard {

// Element of Z[i].
class GaussianInt {
public:
    GaussianInt() = default;
    GaussianInt(long re) : re_(re) {}
    GaussianInt(long re, long im) : re_(re), im_(im) {}
    GaussianInt(mpz_class re, mpz_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianInt i() { return {0, 1}; }

    const mpz_class& re() const { return re_; }
    const mpz_class& im() const { return im_; }

    mpz_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianInt conj() const { return {re_, -im_}; }
    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_unit() const { return norm() == 1; }

    GaussianInt operator-() const { return {-re_, -im_}; }
    GaussianInt& operator+=(const GaussianInt& o);
    GaussianInt& operator-=(const GaussianInt& o);
    GaussianInt& operator*=(const GaussianInt& o);

    friend GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend GaussianInt operator-(GaussianInt a, const GaussianInt& b) { return a -= b; }
    friend GaussianInt operator*(GaussianInt a, const GaussianInt& b) { return a *= b; }
    friend bool operator==(const GaussianInt& a, const GaussianInt& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianInt& a, const GaussianInt& b) { return !(a == b); }
    // Lexicographic on (re, im); only for ordered containers.
    friend bool operator<(const GaussianInt& a, const GaussianInt& b) {
        int c = cmp(a.re_, b.re_);
        return c != 0 ? c < 0 : a.im_ < b.im_;
    }

    std::string str() const;

private:
    mpz_class re_{0};
    mpz_class im_{0};
};

// a = q*b + r with q the rounded quotient, so norm(r) <= norm(b)/2.
std::pair<GaussianInt, GaussianInt> divmod(const GaussianInt& a, const GaussianInt& b);
// a/b when b divides a.
std::optional<GaussianInt> exact_div(const GaussianInt& a, const GaussianInt& b);
GaussianInt gcd(GaussianInt a, GaussianInt b);
GaussianInt unit_power(int k);  // i^k

// Element of Q(i); mpq_class keeps each part canonical.
class GaussianRat {
public:
    GaussianRat() = default;
    GaussianRat(long re) : re_(re) {}
    GaussianRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
        re_.canonicalize();
        im_.canonicalize();
    }
    GaussianRat(const GaussianInt& z) : re_(z.re()), im_(z.im()) {}

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRat conj() const { return {re_, -im_}; }
    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_integral() const { return re_.get_den() == 1 && im_.get_den() == 1; }
    GaussianInt to_int() const;  // throws unless integral
    GaussianRat inverse() const;

    GaussianRat operator-() const { return {-re_, -im_}; }
    GaussianRat& operator+=(const GaussianRat& o);
    GaussianRat& operator-=(const GaussianRat& o);
    GaussianRat& operator*=(const GaussianRat& o);
    GaussianRat& operator/=(const GaussianRat& o);
    friend GaussianRat operator+(GaussianRat a, const GaussianRat& b) { return a += b; }
    friend GaussianRat operator-(GaussianRat a, const GaussianRat& b) { return a -= b; }
    friend GaussianRat operator*(GaussianRat a, const GaussianRat& b) { return a *= b; }
    friend GaussianRat operator/(GaussianRat a, const GaussianRat& b) { return a /= b; }
    friend bool operator==(const GaussianRat& a, const GaussianRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRat& a, const GaussianRat& b) { return !(a == b); }

    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Column vector (n, p, q).
using GVec3 = std::array<GaussianInt, 3>;

struct GMat3 {
    std::array<std::array<GaussianInt, 3>, 3> a{};

    GaussianInt& operator()(int i, int j) { return a[i][j]; }
    const GaussianInt& operator()(int i, int j) const { return a[i][j]; }

    static GMat3 identity();
    static GMat3 from_columns(const GVec3& c0, const GVec3& c1, const GVec3& c2);
    GVec3 column(int j) const { return {a[0][j], a[1][j], a[2][j]}; }

    GaussianInt det() const;
    GMat3 adjugate() const;
    GMat3 conj_transpose() const;
    GMat3 transpose() const;

    friend GMat3 operator*(const GMat3& x, const GMat3& y);
    friend GVec3 operator*(const GMat3& x, const GVec3& v);
    friend bool operator==(const GMat3& x, const GMat3& y) { return x.a == y.a; }
    friend bool operator!=(const GMat3& x, const GMat3& y) { return !(x == y); }
    friend bool operator<(const GMat3& x, const GMat3& y);

    std::string str() const;
};

GVec3 scale(const GaussianInt& u, const GVec3& v);
bool is_zero(const GVec3& v);
std::string to_string(const GVec3& v);

// The form matrix J.
const GMat3& form_matrix();
// Q(u,v) = conj(u1) i v3 - conj(u2) v2 - conj(u3) i v1.
GaussianInt q_form(const GVec3& u, const GVec3& v);
bool is_isotropic(const GVec3& v);
// gcd of the entries is a unit. Throws std::invalid_argument on zero.
bool is_reduced(const GVec3& v);
GaussianInt content(const GVec3& v);
// First nonzero entry gets re > 0, im >= 0. Throws on zero.
GVec3 unit_normalize(const GVec3& v);
// Unit u with unit_normalize(v) = u v.
GaussianInt normalizing_unit(const GVec3& v);

}  // namespace picard
