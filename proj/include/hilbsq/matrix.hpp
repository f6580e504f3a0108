#pragma once

// Small dense matrix type over an exact scalar (Int or Rat), plus the exact
// linear algebra the lattice routines need: fraction-free determinants,
// rational inversion and rank.

#include "hilbsq/arith.hpp"
#include "hilbsq/errors.hpp"

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace hilbsq {

template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("Mat: ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Mat: dimension mismatch in product");
        Mat out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    if (rhs(k, j) == 0) continue;
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
        return out;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    // row[dst] += c * row[src]
    void add_row(std::size_t dst, std::size_t src, const T& c) {
        if (c == 0) return;
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += c * (*this)(src, j);
    }

    // col[dst] += c * col[src]
    void add_col(std::size_t dst, std::size_t src, const T& c) {
        if (c == 0) return;
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += c * (*this)(i, src);
    }

    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
    }

    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rat(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

// Exact conversion; throws std::invalid_argument on non-integer entries.
inline IntMat to_int(const RatMat& m) {
    IntMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_int(m(i, j));
    return out;
}

// Fraction-free (Bareiss) determinant of an integer matrix. Intermediate
// values stay integral, so no rational arithmetic is needed.
inline Int determinant(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMat a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

// Gauss-Jordan inverse over the rationals; returns false if singular.
inline bool try_invert(const RatMat& m, RatMat& out) {
    if (!m.is_square()) throw std::invalid_argument("try_invert: matrix not square");
    const std::size_t n = m.rows();
    RatMat a = m;
    out = RatMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && a(p, col) == 0) ++p;
        if (p == n) return false;
        a.swap_rows(col, p);
        out.swap_rows(col, p);
        Rat inv_piv = Rat(1) / a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= inv_piv;
            out(col, j) *= inv_piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                out(i, j) -= f * out(col, j);
            }
        }
    }
    return true;
}

// Rank over the rationals by Gaussian elimination.
inline std::size_t rank_rat(RatMat a) {
    std::size_t rank = 0;
    const std::size_t rows = a.rows(), cols = a.cols();
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a(p, col) == 0) ++p;
        if (p == rows) continue;
        a.swap_rows(rank, p);
        Rat inv_piv = Rat(1) / a(rank, col);
        for (std::size_t j = col; j < cols; ++j) a(rank, j) *= inv_piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_rat(const IntMat& m) { return rank_rat(to_rat(m)); }

}  // namespace hilbsq
