#ifndef M1COH_INTEGER_MATRIX_HPP
#define M1COH_INTEGER_MATRIX_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace m1coh {

using Integer = mpz_class;
using Rational = mpq_class;

/**
 * Dense matrix of arbitrary-precision integers, stored row-major.
 *
 * Every differential and every group action in the library is an
 * IntegerMatrix. A matrix with zero rows or zero columns is valid and
 * represents the unique map to or from the zero module.
 */
class IntegerMatrix {
public:
    IntegerMatrix() = default;

    IntegerMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    IntegerMatrix(std::initializer_list<std::initializer_list<long>> init)
    {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        entries_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("IntegerMatrix: ragged initializer");
            for (long v : row)
                entries_.emplace_back(v);
        }
    }

    IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_)
            throw std::invalid_argument("IntegerMatrix: entry count does not match shape");
    }

    static IntegerMatrix identity(std::size_t n)
    {
        IntegerMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    static IntegerMatrix zero(std::size_t rows, std::size_t cols) { return IntegerMatrix(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Integer>& entries() const { return entries_; }

    bool is_zero() const
    {
        for (const auto& e : entries_)
            if (e != 0)
                return false;
        return true;
    }

    bool is_diagonal() const
    {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && (*this)(i, j) != 0)
                    return false;
        return true;
    }

    IntegerMatrix transpose() const
    {
        IntegerMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entries reduced into [0, p).
    IntegerMatrix reduced_mod(const Integer& p) const
    {
        IntegerMatrix r(rows_, cols_);
        for (std::size_t k = 0; k < entries_.size(); ++k) {
            mpz_fdiv_r(r.entries_[k].get_mpz_t(), entries_[k].get_mpz_t(), p.get_mpz_t());
        }
        return r;
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            std::swap((*this)(i, a), (*this)(i, b));
    }

    /// row[dst] += factor * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(src, j) != 0)
                (*this)(dst, j) += factor * (*this)(src, j);
    }

    /// col[dst] += factor * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
    {
        if (factor == 0)
            return;
        for (std::size_t i = 0; i < rows_; ++i)
            if ((*this)(i, src) != 0)
                (*this)(i, dst) += factor * (*this)(i, src);
    }

    void negate_row(std::size_t r)
    {
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(r, j) = -(*this)(r, j);
    }

    void negate_col(std::size_t c)
    {
        for (std::size_t i = 0; i < rows_; ++i)
            (*this)(i, c) = -(*this)(i, c);
    }

    IntegerMatrix& operator+=(const IntegerMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] += o.entries_[k];
        return *this;
    }

    IntegerMatrix& operator-=(const IntegerMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k)
            entries_[k] -= o.entries_[k];
        return *this;
    }

    IntegerMatrix& operator*=(const Integer& s)
    {
        for (auto& e : entries_)
            e *= s;
        return *this;
    }

    friend IntegerMatrix operator+(IntegerMatrix a, const IntegerMatrix& b) { return a += b; }
    friend IntegerMatrix operator-(IntegerMatrix a, const IntegerMatrix& b) { return a -= b; }
    friend IntegerMatrix operator-(IntegerMatrix a)
    {
        for (auto& e : a.entries_)
            e = -e;
        return a;
    }
    friend IntegerMatrix operator*(const Integer& s, IntegerMatrix a) { return a *= s; }

    friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
        IntegerMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& aik = a(i, k);
                if (aik == 0)
                    continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    if (b(k, j) != 0)
                        c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend std::vector<Integer> operator*(const IntegerMatrix& a, const std::vector<Integer>& v)
    {
        if (a.cols_ != v.size())
            throw std::invalid_argument("IntegerMatrix: shape mismatch in matrix-vector product");
        std::vector<Integer> out(a.rows_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                out[i] += a(i, j) * v[j];
        return out;
    }

    friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntegerMatrix& m)
    {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j)
                os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void require_same_shape(const IntegerMatrix& o) const
    {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("IntegerMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> entries_;
};

/// Matrix power by repeated squaring; `e` must be non-negative.
inline IntegerMatrix power(const IntegerMatrix& g, unsigned e)
{
    if (!g.is_square())
        throw std::invalid_argument("power: matrix is not square");
    IntegerMatrix result = IntegerMatrix::identity(g.rows());
    IntegerMatrix base = g;
    while (e) {
        if (e & 1u)
            result = result * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

/// Exact determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntegerMatrix m)
{
    if (!m.is_square())
        throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && m(r, k) == 0)
                ++r;
            if (r == n)
                return 0;
            m.swap_rows(k, r);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

} // namespace m1coh

#endif // M1COH_INTEGER_MATRIX_HPP
