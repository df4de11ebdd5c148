#ifndef DKP_GAUSSINT_HPP
#define DKP_GAUSSINT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "dkp/errors.hpp"

namespace dkp {

/// Gaussian integer a + b*i. The canonical beta-matrices have entries in
/// {0, +-1, +-i}, so all algebra identities can be checked without floating
/// point. 64-bit parts are far beyond anything word products can reach here.
struct GaussInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr GaussInt() = default;
    constexpr GaussInt(std::int64_t r, std::int64_t i = 0) : re(r), im(i) {}

    static constexpr GaussInt unit_i() { return {0, 1}; }

    constexpr GaussInt conj() const { return {re, -im}; }
    constexpr bool is_zero() const { return re == 0 && im == 0; }
    /// |z|^2, exact.
    constexpr std::int64_t abs2() const { return re * re + im * im; }

    friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
    friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
    friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
    friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(GaussInt a, GaussInt b) { return a.re == b.re && a.im == b.im; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

/// Dense square matrix over GaussInt (dimension fixed at construction, 3 or 6
/// for the canonical representations, but any size works).
class GaussMat {
public:
    GaussMat() = default;
    explicit GaussMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}

    static GaussMat identity(int n) {
        GaussMat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = GaussInt(1);
        return m;
    }

    int dim() const { return n_; }

    GaussInt& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const GaussInt& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    GaussMat adjoint() const {
        GaussMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j).conj();
        return m;
    }

    GaussMat transpose() const {
        GaussMat m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool is_zero() const {
        for (const auto& z : a_)
            if (!z.is_zero()) return false;
        return true;
    }

    /// max over entries of |z|^2, exact.
    std::int64_t max_abs2() const {
        std::int64_t m = 0;
        for (const auto& z : a_) m = std::max(m, z.abs2());
        return m;
    }

    std::vector<std::complex<double>> to_complex() const {
        std::vector<std::complex<double>> out(a_.size());
        for (std::size_t k = 0; k < a_.size(); ++k) out[k] = a_[k].to_complex();
        return out;
    }

    friend GaussMat operator+(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat m(x.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = x.a_[k] + y.a_[k];
        return m;
    }

    friend GaussMat operator-(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat m(x.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = x.a_[k] - y.a_[k];
        return m;
    }

    friend GaussMat operator-(const GaussMat& x) {
        GaussMat m(x.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = -x.a_[k];
        return m;
    }

    friend GaussMat operator*(GaussInt s, const GaussMat& x) {
        GaussMat m(x.n_);
        for (std::size_t k = 0; k < m.a_.size(); ++k) m.a_[k] = s * x.a_[k];
        return m;
    }

    friend GaussMat operator*(const GaussMat& x, const GaussMat& y) {
        check_dims(x, y);
        GaussMat m(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const GaussInt xik = x(i, k);
                if (xik.is_zero()) continue;
                for (int j = 0; j < x.n_; ++j) m(i, j) = m(i, j) + xik * y(k, j);
            }
        return m;
    }

    friend bool operator==(const GaussMat& x, const GaussMat& y) {
        return x.n_ == y.n_ && x.a_ == y.a_;
    }

private:
    static void check_dims(const GaussMat& x, const GaussMat& y) {
        if (x.n_ != y.n_)
            throw DimensionMismatch("matrix dimensions differ: " + std::to_string(x.n_) + " vs " +
                                    std::to_string(y.n_));
    }

    int n_ = 0;
    std::vector<GaussInt> a_;
};

} // namespace dkp

#endif
