#pragma once

// Dense matrices over an exact commutative ring (the Laurent rings here).
// Inversion is fraction-free elimination: det must be a unit of the ring,
// else the matrix has no inverse over the ring and we raise.

#include <stdexcept>
#include <string>
#include <vector>

namespace zlkb {

template <class R>
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static Mat identity(std::size_t k) {
        Mat m(k, k);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend Mat operator*(const Mat& x, const Mat& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("Mat: shape mismatch in product");
        Mat r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) {
                    if (y(k, j).is_zero()) continue;
                    r(i, j) += x(i, k) * y(k, j);
                }
            }
        return r;
    }
    friend Mat operator+(Mat x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Mat: shape mismatch in sum");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
        return x;
    }
    friend Mat operator-(Mat x, const Mat& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("Mat: shape mismatch in difference");
        for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
        return x;
    }
    friend bool operator==(const Mat& x, const Mat& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if (i == j ? !(*this)(i, j).is_one() : !(*this)(i, j).is_zero()) return false;
            }
        return true;
    }

    // Bareiss determinant (exact, division-free up to exact divisions).
    R det() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat: det of non-square matrix");
        std::size_t k = rows_;
        if (k == 0) return R(1);
        Mat m = *this;
        R prev(1);
        int sign = 1;
        for (std::size_t p = 0; p + 1 < k; ++p) {
            if (m(p, p).is_zero()) {
                std::size_t s = p + 1;
                while (s < k && m(s, p).is_zero()) ++s;
                if (s == k) return R(0);
                for (std::size_t j = 0; j < k; ++j) std::swap(m(p, j), m(s, j));
                sign = -sign;
            }
            for (std::size_t i = p + 1; i < k; ++i)
                for (std::size_t j = p + 1; j < k; ++j) {
                    R num = m(p, p) * m(i, j) - m(i, p) * m(p, j);
                    auto q = num.divided_by(prev);
                    if (!q) throw std::logic_error("Mat: Bareiss division failed");
                    m(i, j) = *q;
                }
            for (std::size_t i = p + 1; i < k; ++i) m(i, p) = R(0);
            prev = m(p, p);
        }
        R d = m(k - 1, k - 1);
        return sign < 0 ? -d : d;
    }

    // Inverse over the ring; throws if det is not a unit (no inverse with
    // Laurent-polynomial entries exists in that case).
    Mat inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("Mat: inverse of non-square matrix");
        R d = det();
        if (d.is_zero() || !d.is_unit())
            throw std::domain_error("Mat: determinant is not a unit; entries of the inverse "
                                    "would not be Laurent polynomials");
        std::size_t k = rows_;
        // adjugate via solving with fraction-free Gauss-Jordan on [A | I]
        Mat aug(k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) aug(i, j) = (*this)(i, j);
            aug(i, k + i) = R(1);
        }
        R prev(1);
        int sign = 1;
        for (std::size_t p = 0; p < k; ++p) {
            if (aug(p, p).is_zero()) {
                std::size_t s = p + 1;
                while (s < k && aug(s, p).is_zero()) ++s;
                if (s == k) throw std::logic_error("Mat: singular after unit det check");
                for (std::size_t j = 0; j < 2 * k; ++j) std::swap(aug(p, j), aug(s, j));
                sign = -sign;
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (i == p) continue;
                for (std::size_t j = 0; j < 2 * k; ++j) {
                    if (j == p) continue;
                    R num = aug(p, p) * aug(i, j) - aug(i, p) * aug(p, j);
                    auto q = num.divided_by(prev);
                    if (!q) throw std::logic_error("Mat: Bareiss division failed");
                    aug(i, j) = *q;
                }
                aug(i, p) = R(0);
            }
            prev = aug(p, p);
        }
        // now aug left part = diag(prev,...,prev) with prev = +-det; divide rows
        Mat inv(k, k);
        for (std::size_t i = 0; i < k; ++i) {
            R piv = aug(i, i);
            for (std::size_t j = 0; j < k; ++j) {
                auto q = aug(i, k + j).divided_by(piv);
                if (!q)
                    throw std::domain_error("Mat: inverse entry is not a Laurent polynomial");
                inv(i, j) = *q;
            }
        }
        return inv;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<R> a_;
};

} // namespace zlkb
