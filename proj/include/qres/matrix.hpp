#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qres/numeric.hpp"

namespace qres {

// Dense row-major matrix over an exact scalar type.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(long rows, long cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols), fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<long>(init.size());
        cols_ = rows_ ? static_cast<long>(init.begin()->size()) : 0;
        a_.reserve(static_cast<size_t>(rows_ * cols_));
        for (const auto& row : init) {
            if (static_cast<long>(row.size()) != cols_)
                throw std::invalid_argument("Matrix: ragged initializer");
            for (const auto& x : row) a_.push_back(x);
        }
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    T& operator()(long i, long j) {
        check(i, j);
        return a_[static_cast<size_t>(i * cols_ + j)];
    }
    const T& operator()(long i, long j) const {
        check(i, j);
        return a_[static_cast<size_t>(i * cols_ + j)];
    }

    static Matrix identity(long n) {
        Matrix m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix out(rows_, rhs.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long k = 0; k < cols_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (long j = 0; j < rhs.cols_; ++j) out(i, j) += x * rhs(k, j);
            }
        return out;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (static_cast<long>(v.size()) != cols_)
            throw std::invalid_argument("Matrix: shape mismatch in matrix-vector product");
        std::vector<T> out(static_cast<size_t>(rows_), T(0));
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j) out[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
        return out;
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
    }
    bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

    void swap_rows(long i, long j) {
        for (long k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }
    void swap_cols(long i, long j) {
        for (long k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }
    // row i += f * row j
    void add_row(long i, long j, const T& f) {
        for (long k = 0; k < cols_; ++k) (*this)(i, k) += f * (*this)(j, k);
    }
    // col i += f * col j
    void add_col(long i, long j, const T& f) {
        for (long k = 0; k < rows_; ++k) (*this)(k, i) += f * (*this)(k, j);
    }
    void scale_row(long i, const T& f) {
        for (long k = 0; k < cols_; ++k) (*this)(i, k) *= f;
    }

    std::string str() const {
        std::string s;
        for (long i = 0; i < rows_; ++i) {
            s += i ? "\n[" : "[";
            for (long j = 0; j < cols_; ++j) {
                if (j) s += ", ";
                s += to_str((*this)(i, j));
            }
            s += "]";
        }
        return s;
    }

private:
    static std::string to_str(const Int& x) { return x.get_str(); }
    static std::string to_str(const Rat& x) { return x.get_str(); }

    void check(long i, long j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("Matrix: index out of bounds");
    }

    long rows_, cols_;
    std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
    return out;
}

}  // namespace qres
