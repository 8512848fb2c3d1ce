#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "picard/gaussian.hpp"

namespace picard {

// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), d_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
    T* row(std::size_t i) { return d_.data() + i * c_; }
    const T* row(std::size_t i) const { return d_.data() + i * c_; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }
    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix m(r_, count);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
        return m;
    }
    bool is_zero() const {
        for (const auto& x : d_)
            if (!(x == T(0))) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.d_ == b.d_;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix m(a.r_, b.c_);
        for (std::size_t i = 0; i < a.r_; ++i)
            for (std::size_t k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (x == T(0)) continue;
                for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum: shape mismatch");
        for (std::size_t k = 0; k < a.d_.size(); ++k) a.d_[k] += b.d_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix difference: shape mismatch");
        for (std::size_t k = 0; k < a.d_.size(); ++k) a.d_[k] -= b.d_[k];
        return a;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

using ZMatrix = Matrix<mpz_class>;
using GiMatrix = Matrix<GaussianInt>;
using QiMatrix = Matrix<GaussianRat>;

// Stack blocks side by side / on top of each other.
template <class T>
Matrix<T> hconcat(const std::vector<Matrix<T>>& blocks, std::size_t rows) {
    std::size_t c = 0;
    for (const auto& b : blocks) c += b.cols();
    Matrix<T> m(rows, c);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hconcat: row mismatch");
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
        off += b.cols();
    }
    return m;
}
template <class T>
Matrix<T> vconcat(const std::vector<Matrix<T>>& blocks, std::size_t cols) {
    std::size_t r = 0;
    for (const auto& b : blocks) r += b.rows();
    Matrix<T> m(r, cols);
    std::size_t off = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vconcat: column mismatch");
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(off + i, j) = b(i, j);
        off += b.rows();
    }
    return m;
}

GiMatrix to_gaussian(const GMat3& g);
QiMatrix to_rational(const GiMatrix& a);
// a + bi -> [[a, -b], [b, a]] entrywise.
ZMatrix realify(const GiMatrix& a);
// Requires every imaginary part to vanish.
ZMatrix to_integer(const GiMatrix& a);
GiMatrix from_integer(const ZMatrix& a);

// ---- exact, over Q(i) ----

// Fraction-free (Bareiss) elimination over Z[i].
std::size_t rank_exact(GiMatrix a);
// Kernel columns from the reduced row echelon form, each scaled to a primitive
// Gaussian-integral vector.
GiMatrix kernel_exact(const GiMatrix& a);
// X with b X = y, b of full column rank; nullopt if some column of y is outside
// the span.
std::optional<QiMatrix> solve_exact(const GiMatrix& b, const GiMatrix& y);

// ---- exact, over Z ----

// Saturated basis (columns) of {x in Z^n : a x = 0}.
ZMatrix integer_kernel(const ZMatrix& a);
// Nonzero Smith invariants d_1 | d_2 | ... (all positive).
std::vector<mpz_class> smith_invariants(ZMatrix a);
// Integral X with b X = y; nullopt when some column is outside the span or has
// non-integral coordinates.
std::optional<ZMatrix> solve_integral(const ZMatrix& b, const ZMatrix& y);
bool is_saturated(const ZMatrix& basis);

// ---- modular ----

// p = 1 mod 4 and a square root of -1, so Z[i] -> F_p, i -> sqrt_m1.
struct ModPrime {
    std::uint32_t p;
    std::uint32_t sqrt_m1;
};
const std::array<ModPrime, 4>& mod_primes();

using ModMatrix = Matrix<std::uint32_t>;

std::uint32_t reduce_mod(const GaussianInt& z, const ModPrime& pr);
std::uint32_t reduce_mod(const mpz_class& z, std::uint32_t p);
ModMatrix reduce_mod(const GiMatrix& a, const ModPrime& pr);

std::size_t rank_mod(ModMatrix a, const ModPrime& pr);
ModMatrix kernel_mod(ModMatrix a, const ModPrime& pr);
ModMatrix mul_mod(const ModMatrix& a, const ModMatrix& b, const ModPrime& pr);
// a + s b, s in {+1, -1}.
void axpy_mod(ModMatrix& a, const ModMatrix& b, int s, const ModPrime& pr);

}  // namespace picard
