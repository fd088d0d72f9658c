#ifndef KUMMERLOG_MATRIX_HPP
#define KUMMERLOG_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace kummerlog {

template <typename T>
class Matrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;

  public:
    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), data_(r * c, T(0)) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    T const& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b)
    {
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                if (a(i, k) == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(std::vector<T> const& v) const
    {
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    bool operator==(Matrix const& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

/* U * A * V = diag(d_0, d_1, ...) with U, V unimodular, d_i >= 0 and
 * d_i | d_{i+1} over the nonzero part. */
struct SmithForm {
    std::vector<mpz_class> diagonal; // length min(rows, cols)
    IntMatrix U, V;
};

SmithForm smith_normal_form(IntMatrix const& a);

/* Row-style Hermite basis of the lattice spanned by the given integer
 * vectors (all of the same length). Zero rows are dropped. */
std::vector<std::vector<mpz_class>> lattice_basis(std::vector<std::vector<mpz_class>> gens);

/* Inverse of a square nonsingular rational matrix; throws on singularity. */
RatMatrix inverse(RatMatrix const& m);

RatMatrix to_rational(IntMatrix const& m);

} // namespace kummerlog

#endif
